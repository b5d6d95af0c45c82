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

#ifndef MIPSTART_LP_HPP_
#define MIPSTART_LP_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mipstart/instance.hpp"
#include "mipstart/types.hpp"

namespace mipstart {

/// A plain minimization LP. When built by build_l1lp the distance variables
/// form a contiguous block after the first num_base_vars entries, one per
/// integer variable in ascending order.
struct LinearProgram {
  Index num_vars = 0;
  Index num_base_vars = 0;  // x-part; distance block follows, if any
  std::vector<double> objective;
  double objective_offset = 0.0;
  std::vector<SparseRow> leq_rows;
  std::vector<SparseRow> eq_rows;
  std::vector<double> lower;
  std::vector<double> upper;

  Index num_rows() const { return static_cast<Index>(leq_rows.size() + eq_rows.size()); }
};

enum class LpStatus : std::uint8_t { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  Point point;  // over the LP's variables; empty unless optimal
  double objective_value = 0.0;
  std::int64_t iterations = 0;
};

struct LpSolverConfig {
  double optimality_tol = 1e-9;   // reduced-cost threshold
  double pivot_tol = 1e-9;        // smallest acceptable pivot magnitude
  double feasibility_tol = 1e-7;  // phase-1 residual threshold
  std::int64_t max_iterations = 0;  // 0 means 50 * (rows + cols)
};

/// Raised when no usable pivot remains: every candidate entry is below
/// pivot_tol but the column is not a valid unboundedness certificate.
class NumericalBreakdownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solver contract. Adapters for external LP engines implement this same
/// interface; the bundled simplex is the default.
class LpSolver {
 public:
  virtual ~LpSolver() = default;
  virtual LpSolution solve(const LinearProgram& lp, const LpSolverConfig& config) = 0;
};

/// Same problem with integrality dropped.
LinearProgram build_relaxation(const MipInstance& inst);

/// The linearized L1 projection of y onto the LP polyhedron: distance
/// variables d_i >= |x_i - y_i| for each integer index i, objective
/// (1-alpha) * sum d_i + alpha * (sqrt(|I|)/||c||) * c^T x. When c is zero
/// the alpha term is dropped. Requires 0 <= alpha < 1 and y integral on I.
LinearProgram build_l1lp(const MipInstance& inst, const Point& y, double alpha);

/// Sum of the distance block of a solution to a build_l1lp program.
double l1_distance(const LpSolution& sol, const MipInstance& inst);

}  // namespace mipstart

#endif  // MIPSTART_LP_HPP_
