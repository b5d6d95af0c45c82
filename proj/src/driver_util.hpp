// Copyright 2026 The mipstart authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal helpers shared by the LP-projection drivers.

#ifndef MIPSTART_SRC_DRIVER_UTIL_HPP_
#define MIPSTART_SRC_DRIVER_UTIL_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "mipstart/heuristics.hpp"
#include "mipstart/instance.hpp"

namespace mipstart::internal {

/// Independent final check: snap the integer part and re-test feasibility
/// and integrality, never trusting the loop's own bookkeeping.
inline HeuristicOutcome verified_success(const MipInstance& inst, Point candidate,
                                         std::int64_t iterations, double int_tol,
                                         double feas_tol) {
  for (Index i : inst.integer_vars) {
    candidate[i] = clamp_integral(inst, i, round_half(candidate[i]));
  }
  if (!is_lp_feasible(inst, candidate, feas_tol) ||
      !fractional_set(inst, candidate, int_tol).empty()) {
    return HeuristicOutcome::Failure("verification failed", iterations);
  }
  const double objective = inst.original_objective(candidate);
  return HeuristicOutcome::Success(std::move(candidate), objective, iterations);
}

inline Point truncate_to_vars(const MipInstance& inst, const Point& lp_point) {
  return Point(std::vector<double>(lp_point.values.begin(),
                                   lp_point.values.begin() + inst.num_vars));
}

}  // namespace mipstart::internal

#endif  // MIPSTART_SRC_DRIVER_UTIL_HPP_
