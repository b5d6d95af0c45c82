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

#include "mipstart/lp.hpp"

#include <cmath>

#include "mipstart/kernels.hpp"

namespace mipstart {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

LinearProgram build_relaxation(const MipInstance& inst) {
  LinearProgram lp;
  lp.num_vars = inst.num_vars;
  lp.num_base_vars = inst.num_vars;
  lp.objective = inst.objective;
  lp.objective_offset = inst.objective_offset;
  lp.leq_rows = inst.leq_rows;
  lp.eq_rows = inst.eq_rows;
  lp.lower = inst.lower;
  lp.upper = inst.upper;
  return lp;
}

LinearProgram build_l1lp(const MipInstance& inst, const Point& y, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("l1lp alpha must lie in [0, 1)");
  }
  const Index n = inst.num_vars;
  const Index ni = inst.num_integer();

  LinearProgram lp;
  lp.num_vars = n + ni;
  lp.num_base_vars = n;
  lp.leq_rows = inst.leq_rows;
  lp.eq_rows = inst.eq_rows;
  lp.lower = inst.lower;
  lp.upper = inst.upper;
  lp.lower.resize(n + ni, 0.0);
  lp.upper.resize(n + ni, kInfinity);

  // d_k >= y_i - x_i  and  d_k >= x_i - y_i, as two <= rows each.
  for (Index k = 0; k < ni; ++k) {
    const Index i = inst.integer_vars[k];
    const Index d = n + k;
    lp.leq_rows.push_back(SparseRow{{i, d}, {-1.0, -1.0}, -y[i]});
    lp.leq_rows.push_back(SparseRow{{i, d}, {1.0, -1.0}, y[i]});
  }

  lp.objective.assign(n + ni, 0.0);
  const double c_norm = std::sqrt(
      kernels::dot(std::span<const double>(inst.objective), std::span<const double>(inst.objective)));
  const double effective_alpha = c_norm > 0.0 ? alpha : 0.0;
  for (Index k = 0; k < ni; ++k) lp.objective[n + k] = 1.0 - effective_alpha;
  if (effective_alpha > 0.0) {
    const double scale = effective_alpha * std::sqrt(static_cast<double>(ni)) / c_norm;
    for (Index j = 0; j < n; ++j) lp.objective[j] = scale * inst.objective[j];
  }
  return lp;
}

double l1_distance(const LpSolution& sol, const MipInstance& inst) {
  const std::size_t n = static_cast<std::size_t>(inst.num_vars);
  const std::size_t ni = static_cast<std::size_t>(inst.num_integer());
  return kernels::sum(std::span<const double>(sol.point.values.data() + n, ni));
}

}  // namespace mipstart
