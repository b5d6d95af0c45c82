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

#include "mipstart/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "mipstart/kernels.hpp"

namespace mipstart {
namespace {

// Standard-form translation of one original variable.
struct VarMap {
  enum class Kind : std::uint8_t { kShifted, kMirrored, kFree } kind;
  Index col = 0;       // shifted/mirrored column, or positive part when free
  Index col_neg = 0;   // negative part when free
  double offset = 0.0; // lower bound (shifted) or upper bound (mirrored)
};

struct StdRow {
  std::vector<double> coefs;  // dense over structural columns
  double rhs = 0.0;
  bool is_eq = false;
};

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const LpSolverConfig& config)
      : lp_(lp), cfg_(config) {
    build_columns();
    build_rows();
    assemble();
  }

  LpSolution run() {
    LpSolution result;
    const std::int64_t cap = cfg_.max_iterations > 0
                                 ? cfg_.max_iterations
                                 : 50 * static_cast<std::int64_t>(rows_.size() + total_cols_);

    // Phase 1: minimize the artificial sum.
    if (num_art_ > 0) {
      const Outcome out = iterate(phase1_cost_, cap, /*phase2=*/false);
      result.iterations = iterations_;
      if (out == Outcome::kIterationLimit) {
        result.status = LpStatus::kIterationLimit;
        return result;
      }
      if (phase1_objective() > cfg_.feasibility_tol) {
        result.status = LpStatus::kInfeasible;
        return result;
      }
      purge_artificials();
    }

    const Outcome out = iterate(phase2_cost_, cap, /*phase2=*/true);
    result.iterations = iterations_;
    if (out == Outcome::kIterationLimit) {
      result.status = LpStatus::kIterationLimit;
      return result;
    }
    if (out == Outcome::kUnbounded) {
      result.status = LpStatus::kUnbounded;
      return result;
    }

    result.status = LpStatus::kOptimal;
    result.point = extract_point();
    result.objective_value =
        kernels::dot(lp_.objective, std::span<const double>(result.point.values)) +
        lp_.objective_offset;
    verify(result.point);
    return result;
  }

 private:
  enum class Outcome { kOptimal, kUnbounded, kIterationLimit };

  void build_columns() {
    vars_.resize(lp_.num_vars);
    Index next = 0;
    for (Index j = 0; j < lp_.num_vars; ++j) {
      const double lo = lp_.lower[j];
      const double hi = lp_.upper[j];
      if (std::isfinite(lo)) {
        vars_[j] = {VarMap::Kind::kShifted, next++, 0, lo};
      } else if (std::isfinite(hi)) {
        vars_[j] = {VarMap::Kind::kMirrored, next++, 0, hi};
      } else {
        vars_[j] = {VarMap::Kind::kFree, next, next + 1, 0.0};
        next += 2;
      }
    }
    num_struct_ = next;
  }

  // Substitute the variable mapping into one sparse row.
  StdRow translate(const SparseRow& row, bool is_eq) const {
    StdRow out;
    out.coefs.assign(num_struct_, 0.0);
    out.rhs = row.rhs;
    out.is_eq = is_eq;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const VarMap& vm = vars_[row.cols[k]];
      const double a = row.coefs[k];
      switch (vm.kind) {
        case VarMap::Kind::kShifted:
          out.coefs[vm.col] += a;
          out.rhs -= a * vm.offset;
          break;
        case VarMap::Kind::kMirrored:
          out.coefs[vm.col] -= a;
          out.rhs -= a * vm.offset;
          break;
        case VarMap::Kind::kFree:
          out.coefs[vm.col] += a;
          out.coefs[vm.col_neg] -= a;
          break;
      }
    }
    return out;
  }

  void build_rows() {
    for (const SparseRow& row : lp_.leq_rows) rows_.push_back(translate(row, false));
    for (const SparseRow& row : lp_.eq_rows) rows_.push_back(translate(row, true));
    // Two-sided bounds become one extra <= row on the shifted column.
    for (Index j = 0; j < lp_.num_vars; ++j) {
      if (vars_[j].kind == VarMap::Kind::kShifted && std::isfinite(lp_.upper[j])) {
        StdRow bound;
        bound.coefs.assign(num_struct_, 0.0);
        bound.coefs[vars_[j].col] = 1.0;
        bound.rhs = lp_.upper[j] - lp_.lower[j];
        rows_.push_back(std::move(bound));
      }
    }
  }

  void assemble() {
    const Index m = static_cast<Index>(rows_.size());
    Index num_slack = 0;
    for (const StdRow& r : rows_) {
      if (!r.is_eq) ++num_slack;
    }

    // Column layout: structural | slack | artificial, then the rhs cell.
    std::vector<Index> slack_col(m, -1);
    Index next = num_struct_;
    for (Index i = 0; i < m; ++i) {
      if (!rows_[i].is_eq) slack_col[i] = next++;
    }
    const Index slack_end = next;

    std::vector<bool> needs_art(m, false);
    num_art_ = 0;
    for (Index i = 0; i < m; ++i) {
      // Rows flipped to keep the rhs nonnegative lose their +1 slack and
      // need an artificial instead, as do equalities.
      if (rows_[i].is_eq || rows_[i].rhs < 0.0) {
        needs_art[i] = true;
        ++num_art_;
      }
    }
    art_begin_ = slack_end;
    total_cols_ = slack_end + num_art_;
    width_ = total_cols_ + 1;

    tab_.assign(static_cast<std::size_t>(m) * width_, 0.0);
    basis_.assign(m, -1);
    Index next_art = art_begin_;
    for (Index i = 0; i < m; ++i) {
      double* row = tab_.data() + static_cast<std::size_t>(i) * width_;
      const double sign = rows_[i].rhs < 0.0 ? -1.0 : 1.0;
      for (Index j = 0; j < num_struct_; ++j) row[j] = sign * rows_[i].coefs[j];
      row[total_cols_] = sign * rows_[i].rhs;
      if (slack_col[i] >= 0) row[slack_col[i]] = sign * 1.0;
      if (needs_art[i]) {
        row[next_art] = 1.0;
        basis_[i] = next_art++;
      } else {
        basis_[i] = slack_col[i];
      }
    }

    blocked_.assign(total_cols_, false);

    // Phase-2 costs over structural columns.
    phase2_cost_.assign(width_, 0.0);
    for (Index j = 0; j < lp_.num_vars; ++j) {
      const VarMap& vm = vars_[j];
      const double c = lp_.objective[j];
      switch (vm.kind) {
        case VarMap::Kind::kShifted:
          phase2_cost_[vm.col] += c;
          break;
        case VarMap::Kind::kMirrored:
          phase2_cost_[vm.col] -= c;
          break;
        case VarMap::Kind::kFree:
          phase2_cost_[vm.col] += c;
          phase2_cost_[vm.col_neg] -= c;
          break;
      }
    }

    // Phase-1 costs: one per artificial; reduce against the starting basis.
    phase1_cost_.assign(width_, 0.0);
    for (Index a = art_begin_; a < total_cols_; ++a) phase1_cost_[a] = 1.0;
    for (Index i = 0; i < m; ++i) {
      if (basis_[i] >= art_begin_) {
        kernels::axpy(-1.0, row_span(i), std::span<double>(phase1_cost_));
      }
    }
  }

  std::span<double> row_span(Index i) {
    return {tab_.data() + static_cast<std::size_t>(i) * width_, static_cast<std::size_t>(width_)};
  }
  std::span<const double> row_span(Index i) const {
    return {tab_.data() + static_cast<std::size_t>(i) * width_, static_cast<std::size_t>(width_)};
  }
  double rhs(Index i) const { return tab_[static_cast<std::size_t>(i) * width_ + total_cols_]; }

  double phase1_objective() const { return -phase1_cost_[total_cols_]; }

  Outcome iterate(std::vector<double>& cost, std::int64_t cap, bool phase2) {
    const Index m = static_cast<Index>(rows_active_());
    for (;;) {
      if (iterations_ >= cap) return Outcome::kIterationLimit;

      // Bland: smallest eligible column with a negative reduced cost. A
      // column whose best pivot candidate is positive but below pivot_tol is
      // numerically unusable; skip it and remember we had to.
      Index entering = -1;
      Index leaving = -1;
      bool skipped_tiny = false;
      for (Index j = 0; j < total_cols_; ++j) {
        if (blocked_[j]) continue;
        if (phase2 && j >= art_begin_) continue;
        if (cost[j] >= -cfg_.optimality_tol) continue;

        Index best_row = -1;
        double best_ratio = 0.0;
        bool any_positive = false;
        for (Index i = 0; i < m; ++i) {
          const double a = tab_[static_cast<std::size_t>(i) * width_ + j];
          if (a > 0.0) any_positive = true;
          if (a <= cfg_.pivot_tol) continue;
          const double ratio = rhs(i) / a;
          if (best_row < 0 || ratio < best_ratio - 1e-12 ||
              (std::fabs(ratio - best_ratio) <= 1e-12 && basis_[i] < basis_[best_row])) {
            best_row = i;
            best_ratio = ratio;
          }
        }
        if (best_row >= 0) {
          entering = j;
          leaving = best_row;
          break;
        }
        if (!any_positive) {
          // Entire column nonpositive: a ray certificate in phase 2.
          if (phase2) return Outcome::kUnbounded;
          skipped_tiny = true;  // cannot happen in phase 1 unless degenerate dust
        } else {
          skipped_tiny = true;
        }
      }
      if (entering < 0) {
        if (skipped_tiny) {
          throw NumericalBreakdownError(
              "no pivot above pivot tolerance and no alternative column");
        }
        return Outcome::kOptimal;
      }

      pivot(leaving, entering);
      ++iterations_;
    }
  }

  std::size_t rows_active_() const { return basis_.size(); }

  void pivot(Index pr, Index pc) {
    double* prow = tab_.data() + static_cast<std::size_t>(pr) * width_;
    const double inv = 1.0 / prow[pc];
    for (Index j = 0; j < width_; ++j) prow[j] *= inv;
    prow[pc] = 1.0;  // keep the unit column exact

    const std::span<const double> pspan{prow, static_cast<std::size_t>(width_)};
    const Index m = static_cast<Index>(basis_.size());
    for (Index i = 0; i < m; ++i) {
      if (i == pr) continue;
      double* row = tab_.data() + static_cast<std::size_t>(i) * width_;
      const double factor = row[pc];
      if (factor != 0.0) {
        kernels::axpy(-factor, pspan, {row, static_cast<std::size_t>(width_)});
        row[pc] = 0.0;
      }
    }
    auto update_cost = [&](std::vector<double>& c) {
      const double factor = c[pc];
      if (factor != 0.0) {
        kernels::axpy(-factor, pspan, std::span<double>(c));
        c[pc] = 0.0;
      }
    };
    update_cost(phase1_cost_);
    update_cost(phase2_cost_);
    basis_[pr] = pc;
  }

  // After phase 1: pivot leftover artificials out of the basis, drop rows
  // that prove redundant, and block artificial columns for good.
  void purge_artificials() {
    for (Index i = 0; i < static_cast<Index>(basis_.size());) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      double* row = tab_.data() + static_cast<std::size_t>(i) * width_;
      Index col = -1;
      for (Index j = 0; j < art_begin_; ++j) {
        if (!blocked_[j] && std::fabs(row[j]) > cfg_.pivot_tol) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        drop_row(i);
      }
    }
    for (Index a = art_begin_; a < total_cols_; ++a) blocked_[a] = true;
  }

  void drop_row(Index i) {
    const Index last = static_cast<Index>(basis_.size()) - 1;
    if (i != last) {
      std::copy_n(tab_.data() + static_cast<std::size_t>(last) * width_, width_,
                  tab_.data() + static_cast<std::size_t>(i) * width_);
      basis_[i] = basis_[last];
    }
    basis_.pop_back();
    tab_.resize(static_cast<std::size_t>(basis_.size()) * width_);
  }

  Point extract_point() const {
    std::vector<double> std_values(total_cols_, 0.0);
    for (Index i = 0; i < static_cast<Index>(basis_.size()); ++i) {
      std_values[basis_[i]] = rhs(i);
    }
    Point x(static_cast<std::size_t>(lp_.num_vars));
    for (Index j = 0; j < lp_.num_vars; ++j) {
      const VarMap& vm = vars_[j];
      switch (vm.kind) {
        case VarMap::Kind::kShifted:
          x[j] = vm.offset + std_values[vm.col];
          break;
        case VarMap::Kind::kMirrored:
          x[j] = vm.offset - std_values[vm.col];
          break;
        case VarMap::Kind::kFree:
          x[j] = std_values[vm.col] - std_values[vm.col_neg];
          break;
      }
    }
    return x;
  }

  // An optimal status must mean a point that actually satisfies the LP.
  void verify(const Point& x) const {
    const double tol = 1e-6;
    for (Index j = 0; j < lp_.num_vars; ++j) {
      if (x[j] < lp_.lower[j] - tol || x[j] > lp_.upper[j] + tol) {
        throw NumericalBreakdownError("optimal point violates a bound");
      }
    }
    for (const SparseRow& row : lp_.leq_rows) {
      if (kernels::gather_dot(row.cols, row.coefs, x.values.data()) - row.rhs > tol) {
        throw NumericalBreakdownError("optimal point violates a <= row");
      }
    }
    for (const SparseRow& row : lp_.eq_rows) {
      if (std::fabs(kernels::gather_dot(row.cols, row.coefs, x.values.data()) - row.rhs) > tol) {
        throw NumericalBreakdownError("optimal point violates an = row");
      }
    }
  }

  const LinearProgram& lp_;
  const LpSolverConfig& cfg_;
  std::vector<VarMap> vars_;
  std::vector<StdRow> rows_;
  Index num_struct_ = 0;
  Index num_art_ = 0;
  Index art_begin_ = 0;
  Index total_cols_ = 0;
  Index width_ = 0;
  std::vector<double> tab_;
  std::vector<double> phase1_cost_;
  std::vector<double> phase2_cost_;
  std::vector<Index> basis_;
  std::vector<bool> blocked_;
  std::int64_t iterations_ = 0;
};

}  // namespace

LpSolution SimplexSolver::solve(const LinearProgram& lp, const LpSolverConfig& config) {
  Tableau tableau(lp, config);
  return tableau.run();
}

}  // namespace mipstart
