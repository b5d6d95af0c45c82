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

#ifndef MIPSTART_INSTANCE_HPP_
#define MIPSTART_INSTANCE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mipstart/types.hpp"

namespace mipstart {

/// Per-variable lock counts. A row up-locks a variable when increasing the
/// variable can violate the row, and down-locks it when decreasing can.
/// Equality rows lock both directions.
struct LocksProfile {
  std::vector<std::int32_t> up;
  std::vector<std::int32_t> down;
};

struct GapReport {
  double gap = 0.0;  // meaningful only when !is_outlier
  bool is_outlier = false;
  double best_known = 0.0;
};

/// Normalized minimization problem: all inequalities have sense <=,
/// equalities live in their own block. Immutable once finalize() has run;
/// safe to share across threads afterwards.
class MipInstance {
 public:
  std::string name;
  Index num_vars = 0;
  std::vector<double> objective;  // minimization sense
  double objective_offset = 0.0;
  bool from_maximization = false;
  std::vector<SparseRow> leq_rows;
  std::vector<SparseRow> eq_rows;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Index> integer_vars;  // ascending

  struct ColEntry {
    RowKind kind;
    Index row;
    double coef;
  };

  /// Builds the column view, lock counts, magnitudes, and nonzero count.
  /// Must be called exactly once, after all fields above are set.
  void finalize();

  bool finalized() const { return finalized_; }
  Index num_rows() const { return static_cast<Index>(leq_rows.size() + eq_rows.size()); }
  std::int64_t num_nonzeros() const { return nonzeros_; }
  Index num_integer() const { return static_cast<Index>(integer_vars.size()); }

  const SparseRow& row(RowRef ref) const {
    return ref.kind == RowKind::kLessEqual ? leq_rows[ref.index] : eq_rows[ref.index];
  }
  /// Rows in a single flat order: the <= block, then the = block.
  RowRef row_ref(Index flat) const {
    const Index m = static_cast<Index>(leq_rows.size());
    return flat < m ? RowRef{RowKind::kLessEqual, flat} : RowRef{RowKind::kEqual, flat - m};
  }

  bool is_integer(Index j) const { return integer_mask_[j]; }
  std::span<const ColEntry> column(Index j) const { return columns_[j]; }
  const LocksProfile& locks() const { return locks_; }
  /// Mean of |a_ij| / max_k |a_ik| over the rows locking j in `dir`;
  /// 0 when no row locks j that way.
  double magnitude(Index j, Direction dir) const {
    return dir == Direction::kUp ? mag_up_[j] : mag_down_[j];
  }

  /// Objective in the normalized minimization sense.
  double objective_value(const Point& x) const;
  /// Objective in the sense the source file declared.
  double original_objective(const Point& x) const;

 private:
  std::vector<std::vector<ColEntry>> columns_;
  std::vector<bool> integer_mask_;
  LocksProfile locks_;
  std::vector<double> mag_up_;
  std::vector<double> mag_down_;
  std::int64_t nonzeros_ = 0;
  bool finalized_ = false;
};

/// Nearest integer with ties at fractional part exactly 0.5 going down.
double round_half(double a);

/// Indices of integer variables farther than tol from every integer,
/// ascending.
std::vector<Index> fractional_set(const MipInstance& inst, const Point& x, double tol);

/// Signed residual sum_j a_ij x_j - b_i. A <= row is violated when the
/// residual is positive; an equality when it is nonzero.
double row_violation(const MipInstance& inst, const Point& x, RowRef row);

/// True iff every row and bound holds within tol (closed comparison).
bool is_lp_feasible(const MipInstance& inst, const Point& x, double tol);

/// Recomputes lock counts from scratch. MipInstance::locks() serves the
/// cached copy; this is the underlying definition.
LocksProfile compute_locks(const MipInstance& inst);

GapReport optimality_gap(double obj, double best_known, double outlier_epsilon);

/// The integer subvector of x on I, as exact integers. Entries must already
/// be integral within rounding distance.
std::vector<std::int64_t> integer_key(const MipInstance& inst, const Point& x);

/// Nearest integer to v inside the bounds of variable j, or v itself when
/// no integer fits between the bounds.
double clamp_integral(const MipInstance& inst, Index j, double v);

constexpr double kIntegralityTol = 1e-6;
constexpr double kFeasibilityTol = 1e-6;
constexpr double kOutlierEpsilon = 1e-6;

}  // namespace mipstart

#endif  // MIPSTART_INSTANCE_HPP_
