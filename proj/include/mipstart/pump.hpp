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

#ifndef MIPSTART_PUMP_HPP_
#define MIPSTART_PUMP_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "mipstart/heuristics.hpp"
#include "mipstart/instance.hpp"
#include "mipstart/lp.hpp"
#include "mipstart/random.hpp"

namespace mipstart {

struct PumpConfig {
  int maxiter = 250;
  double alpha = 0.0;        // weight of the original objective inside the projection
  double t_fraction = 0.1;   // share of fractional variables flipped on a 1-cycle
  double int_tol = kIntegralityTol;
  double feas_tol = kFeasibilityTol;
  double l1_tol = 1e-6;      // projection distance treated as zero
  LpSolverConfig lp;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct IntegerKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t v : key) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Rounded iterates seen so far, keyed by the integer subvector on I.
struct PumpHistory {
  std::unordered_set<std::vector<std::int64_t>, IntegerKeyHash> seen;
  std::optional<std::vector<std::int64_t>> last;

  void add(const MipInstance& inst, const Point& y) {
    auto key = integer_key(inst, y);
    seen.insert(key);
    last = std::move(key);
  }
};

enum class CycleKind : std::uint8_t { kNone, kOneLength, kLong };

/// One-length when y repeats the immediately preceding rounded point,
/// long when it repeats any earlier one.
CycleKind detect_cycle(const PumpHistory& history, const MipInstance& inst, const Point& y);

/// Flips the rounding direction of the t_count most fractional variables of
/// x_frac (ties to the lower index), clamped to bounds.
Point perturb_one_length(const MipInstance& inst, const Point& x_frac, const Point& y,
                         int t_count, double int_tol = kIntegralityTol);

/// The long-cycle flip test: rho is drawn uniformly from (-0.3, 0.7) and the
/// entry flips when |x - round_half(x) + max(0, rho)| > 0.5.
bool long_cycle_flip(double x_value, double rho);

/// Applies the long-cycle rule to every fractional variable with an
/// independent rho, drawn in ascending index order. When no entry flips, the
/// single most fractional variable is flipped so the iterate always moves.
Point perturb_long_cycle(const MipInstance& inst, const Point& x_frac, const Point& y,
                         Rng& rng, double int_tol = kIntegralityTol);

HeuristicOutcome feasibility_pump(const MipInstance& inst, const PumpConfig& config,
                                  Rng& rng, LpSolver& solver);
HeuristicOutcome feasibility_pump(const MipInstance& inst, const PumpConfig& config,
                                  Rng& rng);

}  // namespace mipstart

#endif  // MIPSTART_PUMP_HPP_
