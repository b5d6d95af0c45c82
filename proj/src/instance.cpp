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

#include "mipstart/instance.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "mipstart/kernels.hpp"

namespace mipstart {

void MipInstance::finalize() {
  assert(!finalized_);
  const std::size_t n = static_cast<std::size_t>(num_vars);
  assert(objective.size() == n && lower.size() == n && upper.size() == n);

  integer_mask_.assign(n, false);
  for (Index j : integer_vars) integer_mask_[j] = true;

  columns_.assign(n, {});
  nonzeros_ = 0;
  auto index_block = [&](const std::vector<SparseRow>& rows, RowKind kind) {
    for (Index r = 0; r < static_cast<Index>(rows.size()); ++r) {
      const SparseRow& row = rows[r];
      for (std::size_t k = 0; k < row.size(); ++k) {
        columns_[row.cols[k]].push_back({kind, r, row.coefs[k]});
        ++nonzeros_;
      }
    }
  };
  index_block(leq_rows, RowKind::kLessEqual);
  index_block(eq_rows, RowKind::kEqual);

  finalized_ = true;
  locks_ = compute_locks(*this);

  // Magnitudes: per locking row, |a_ij| normalized by the row's largest
  // absolute coefficient, averaged over the locking rows of each direction.
  std::vector<double> row_norm(leq_rows.size() + eq_rows.size(), 0.0);
  const Index m = static_cast<Index>(leq_rows.size());
  for (Index r = 0; r < m; ++r) {
    for (double c : leq_rows[r].coefs) row_norm[r] = std::max(row_norm[r], std::fabs(c));
  }
  for (Index r = 0; r < static_cast<Index>(eq_rows.size()); ++r) {
    for (double c : eq_rows[r].coefs) row_norm[m + r] = std::max(row_norm[m + r], std::fabs(c));
  }

  mag_up_.assign(n, 0.0);
  mag_down_.assign(n, 0.0);
  for (Index j = 0; j < num_vars; ++j) {
    double up_total = 0.0, down_total = 0.0;
    int up_count = 0, down_count = 0;
    for (const ColEntry& e : columns_[j]) {
      if (e.coef == 0.0) continue;
      const Index flat = e.kind == RowKind::kLessEqual ? e.row : m + e.row;
      const double rel = std::fabs(e.coef) / row_norm[flat];
      const bool locks_up = e.kind == RowKind::kEqual || e.coef > 0.0;
      const bool locks_down = e.kind == RowKind::kEqual || e.coef < 0.0;
      if (locks_up) {
        up_total += rel;
        ++up_count;
      }
      if (locks_down) {
        down_total += rel;
        ++down_count;
      }
    }
    if (up_count > 0) mag_up_[j] = up_total / up_count;
    if (down_count > 0) mag_down_[j] = down_total / down_count;
  }
}

double MipInstance::objective_value(const Point& x) const {
  return kernels::dot(std::span<const double>(objective),
                      std::span<const double>(x.values.data(), objective.size())) +
         objective_offset;
}

double MipInstance::original_objective(const Point& x) const {
  const double v = objective_value(x);
  return from_maximization ? -v : v;
}

double round_half(double a) {
  const double fl = std::floor(a);
  return (a - fl <= 0.5) ? fl : std::ceil(a);
}

std::vector<Index> fractional_set(const MipInstance& inst, const Point& x, double tol) {
  std::vector<Index> out;
  for (Index j : inst.integer_vars) {
    const double v = x[j];
    if (std::fabs(v - std::nearbyint(v)) > tol) out.push_back(j);
  }
  return out;
}

double row_violation(const MipInstance& inst, const Point& x, RowRef ref) {
  const SparseRow& row = inst.row(ref);
  return kernels::gather_dot(row.cols, row.coefs, x.values.data()) - row.rhs;
}

bool is_lp_feasible(const MipInstance& inst, const Point& x, double tol) {
  for (Index j = 0; j < inst.num_vars; ++j) {
    if (x[j] < inst.lower[j] - tol || x[j] > inst.upper[j] + tol) return false;
  }
  for (Index r = 0; r < static_cast<Index>(inst.leq_rows.size()); ++r) {
    if (row_violation(inst, x, {RowKind::kLessEqual, r}) > tol) return false;
  }
  for (Index r = 0; r < static_cast<Index>(inst.eq_rows.size()); ++r) {
    if (std::fabs(row_violation(inst, x, {RowKind::kEqual, r})) > tol) return false;
  }
  return true;
}

LocksProfile compute_locks(const MipInstance& inst) {
  LocksProfile locks;
  locks.up.assign(inst.num_vars, 0);
  locks.down.assign(inst.num_vars, 0);
  for (const SparseRow& row : inst.leq_rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row.coefs[k] > 0.0) {
        ++locks.up[row.cols[k]];
      } else if (row.coefs[k] < 0.0) {
        ++locks.down[row.cols[k]];
      }
    }
  }
  for (const SparseRow& row : inst.eq_rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row.coefs[k] != 0.0) {
        ++locks.up[row.cols[k]];
        ++locks.down[row.cols[k]];
      }
    }
  }
  return locks;
}

std::vector<std::int64_t> integer_key(const MipInstance& inst, const Point& x) {
  std::vector<std::int64_t> key;
  key.reserve(inst.integer_vars.size());
  for (Index i : inst.integer_vars) key.push_back(std::llround(x[i]));
  return key;
}

double clamp_integral(const MipInstance& inst, Index j, double v) {
  const double lo = std::ceil(inst.lower[j] - kIntegralityTol);
  const double hi = std::floor(inst.upper[j] + kIntegralityTol);
  if (lo > hi) return v;
  return std::min(hi, std::max(lo, v));
}

GapReport optimality_gap(double obj, double best_known, double outlier_epsilon) {
  GapReport report;
  report.best_known = best_known;
  if (std::fabs(best_known) < outlier_epsilon) {
    report.is_outlier = true;
    return report;
  }
  report.gap = (obj - best_known) / best_known;
  return report;
}

}  // namespace mipstart
