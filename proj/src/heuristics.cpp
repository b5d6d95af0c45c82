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

#include "mipstart/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mipstart {
namespace {

using Clock = std::chrono::steady_clock;

bool past_deadline(const HeuristicLimits& limits) {
  return limits.deadline.has_value() && Clock::now() >= *limits.deadline;
}

void require_lp_feasible(const MipInstance& inst, const Point& x,
                         const HeuristicLimits& limits, const char* who) {
  if (x.size() != static_cast<std::size_t>(inst.num_vars)) {
    throw std::invalid_argument(std::string(who) + ": point has wrong dimension");
  }
  if (!is_lp_feasible(inst, x, limits.feas_tol)) {
    throw std::invalid_argument(std::string(who) + ": input point is not LP-feasible");
  }
}

double clamp_to_bounds(const MipInstance& inst, Index j, double v) {
  return std::min(inst.upper[j], std::max(inst.lower[j], v));
}

void apply_rounding(const MipInstance& inst, Point& x, Index j, Direction dir) {
  const double rounded = dir == Direction::kUp ? std::ceil(x[j]) : std::floor(x[j]);
  x[j] = clamp_to_bounds(inst, j, rounded);
}

void erase_index(std::vector<Index>& set, Index j) {
  set.erase(std::find(set.begin(), set.end(), j));
}

/// Most violated row, ties to the lowest flat index; nothing when the point
/// is feasible within tol.
std::optional<RowRef> most_violated_row(const MipInstance& inst, const Point& x, double tol) {
  std::optional<RowRef> best;
  double best_magnitude = tol;
  const Index num_leq = static_cast<Index>(inst.leq_rows.size());
  for (Index r = 0; r < num_leq; ++r) {
    const double v = row_violation(inst, x, {RowKind::kLessEqual, r});
    if (v > best_magnitude) {
      best_magnitude = v;
      best = RowRef{RowKind::kLessEqual, r};
    }
  }
  for (Index r = 0; r < static_cast<Index>(inst.eq_rows.size()); ++r) {
    const double v = std::fabs(row_violation(inst, x, {RowKind::kEqual, r}));
    if (v > best_magnitude) {
      best_magnitude = v;
      best = RowRef{RowKind::kEqual, r};
    }
  }
  return best;
}

/// Direction that moves the row's activity back toward feasibility, given
/// the signed violation of the row and the variable's coefficient in it.
Direction repair_direction(double violation, double coef) {
  const bool activity_too_high = violation > 0.0;
  if (activity_too_high) {
    return coef > 0.0 ? Direction::kDown : Direction::kUp;
  }
  return coef > 0.0 ? Direction::kUp : Direction::kDown;
}

struct FeasibleChoice {
  Index var = -1;
  Direction dir = Direction::kDown;
};

// Feasible branch shared by Rounding and Shifting: track the raw lock
// maximum over both directions of every fractional variable, up checked
// before down, strict comparisons keeping the lowest index.
std::optional<FeasibleChoice> max_lock_choice(const MipInstance& inst,
                                              const std::vector<Index>& fractional) {
  const LocksProfile& locks = inst.locks();
  std::int64_t best = -1;
  FeasibleChoice choice;
  for (Index j : fractional) {
    if (locks.up[j] > best) {
      best = locks.up[j];
      choice = {j, Direction::kDown};
    }
    if (locks.down[j] > best) {
      best = locks.down[j];
      choice = {j, Direction::kUp};
    }
  }
  if (choice.var < 0) return std::nullopt;
  return choice;
}

HeuristicOutcome finish(const MipInstance& inst, Point point, std::int64_t iterations,
                        const HeuristicLimits& limits, Clock::time_point start) {
  HeuristicOutcome out;
  if (is_lp_feasible(inst, point, limits.feas_tol) &&
      fractional_set(inst, point, limits.int_tol).empty()) {
    out = HeuristicOutcome::Success(std::move(point), 0.0, iterations);
    out.objective = inst.original_objective(out.point);
  } else {
    out = HeuristicOutcome::Failure("final point not LP-feasible", iterations);
  }
  out.elapsed = Clock::now() - start;
  return out;
}

}  // namespace

HeuristicOutcome HeuristicOutcome::Success(Point point, double objective,
                                           std::int64_t iterations) {
  HeuristicOutcome out;
  out.status = Status::kSuccess;
  out.point = std::move(point);
  out.objective = objective;
  out.iterations = iterations;
  return out;
}

HeuristicOutcome HeuristicOutcome::Failure(std::string reason, std::int64_t iterations) {
  HeuristicOutcome out;
  out.status = Status::kFailure;
  out.failure_reason = std::move(reason);
  out.iterations = iterations;
  return out;
}

Roundability trivially_roundable(const MipInstance& inst, const Point& x, Index j,
                                 const LocksProfile& locks) {
  (void)inst;
  (void)x;
  if (locks.down[j] == 0) return Roundability::kDown;
  if (locks.up[j] == 0) return Roundability::kUp;
  return Roundability::kNone;
}

HeuristicOutcome simple_rounding(const MipInstance& inst, const Point& x0,
                                 const HeuristicLimits& limits) {
  const auto start = Clock::now();
  require_lp_feasible(inst, x0, limits, "simple_rounding");
  if (past_deadline(limits)) return HeuristicOutcome::Failure("time limit");

  Point x = x0;
  const LocksProfile& locks = inst.locks();
  std::int64_t steps = 0;
  for (Index j : fractional_set(inst, x, limits.int_tol)) {
    const Roundability r = trivially_roundable(inst, x, j, locks);
    if (r == Roundability::kNone) {
      auto out = HeuristicOutcome::Failure("no trivially roundable direction", steps);
      out.elapsed = Clock::now() - start;
      return out;
    }
    apply_rounding(inst, x, j, r == Roundability::kDown ? Direction::kDown : Direction::kUp);
    ++steps;
  }
  return finish(inst, std::move(x), steps, limits, start);
}

HeuristicOutcome rounding(const MipInstance& inst, const Point& x0,
                          const HeuristicLimits& limits) {
  const auto start = Clock::now();
  require_lp_feasible(inst, x0, limits, "rounding");

  Point x = x0;
  std::vector<Index> fractional = fractional_set(inst, x, limits.int_tol);
  const std::int64_t cap = inst.num_integer() + limits.extra_iterations;
  const LocksProfile& locks = inst.locks();
  std::int64_t iter = 0;

  while (!fractional.empty()) {
    if (++iter > cap) {
      auto out = HeuristicOutcome::Failure("stalled", iter - 1);
      out.elapsed = Clock::now() - start;
      return out;
    }
    if (past_deadline(limits)) {
      auto out = HeuristicOutcome::Failure("time limit", iter - 1);
      out.elapsed = Clock::now() - start;
      return out;
    }

    const std::optional<RowRef> violated = most_violated_row(inst, x, limits.feas_tol);
    std::optional<FeasibleChoice> choice;
    if (!violated.has_value()) {
      choice = max_lock_choice(inst, fractional);
    } else {
      // Min-lock fractional variable of the violated row, moved the way
      // that shrinks the violation.
      const SparseRow& row = inst.row(*violated);
      const double violation = row_violation(inst, x, *violated);
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (Index j : fractional) {
        const auto pos = std::find(row.cols.begin(), row.cols.end(), j);
        if (pos == row.cols.end()) continue;
        const double coef = row.coefs[pos - row.cols.begin()];
        if (coef == 0.0) continue;
        const Direction dir = repair_direction(violation, coef);
        const std::int64_t lock_count =
            dir == Direction::kDown ? locks.down[j] : locks.up[j];
        if (lock_count < best) {
          best = lock_count;
          choice = FeasibleChoice{j, dir};
        }
      }
    }
    if (!choice.has_value()) {
      auto out = HeuristicOutcome::Failure("stalled", iter);
      out.elapsed = Clock::now() - start;
      return out;
    }
    apply_rounding(inst, x, choice->var, choice->dir);
    erase_index(fractional, choice->var);
  }
  return finish(inst, std::move(x), iter, limits, start);
}

HeuristicOutcome shifting(const MipInstance& inst, const Point& x0, Rng& rng,
                          const HeuristicLimits& limits) {
  (void)rng;  // selection is deterministic; kept for interface symmetry
  const auto start = Clock::now();
  require_lp_feasible(inst, x0, limits, "shifting");

  Point x = x0;
  std::vector<Index> fractional = fractional_set(inst, x, limits.int_tol);
  const std::int64_t cap =
      10 * (inst.num_integer() + inst.num_rows()) + limits.extra_iterations;
  const LocksProfile& locks = inst.locks();
  ForbiddenList forbidden;
  std::int64_t iter = 0;

  auto record = [&](Index var, Direction dir, bool added) {
    if (limits.trace != nullptr) limits.trace->steps.push_back({iter, var, dir, added});
  };
  auto fail = [&](const char* reason) {
    auto out = HeuristicOutcome::Failure(reason, iter);
    out.elapsed = Clock::now() - start;
    return out;
  };

  for (;;) {
    const std::optional<RowRef> violated = most_violated_row(inst, x, limits.feas_tol);
    if (fractional.empty() && !violated.has_value()) break;
    if (++iter > cap) return fail("iteration limit");
    if (past_deadline(limits)) return fail("time limit");

    if (!violated.has_value()) {
      const auto choice = max_lock_choice(inst, fractional);
      if (!choice.has_value()) return fail("stalled");
      apply_rounding(inst, x, choice->var, choice->dir);
      erase_index(fractional, choice->var);
      forbidden.on_update(choice->var, choice->dir);
      record(choice->var, choice->dir, false);
      continue;
    }

    // Score every variable of the violated row, continuous included. The
    // score -1 + 1/(locks+1) decreases as locks grow, so the minimum picks
    // the most locked variable in its repair direction.
    const SparseRow& row = inst.row(*violated);
    const double violation = row_violation(inst, x, *violated);
    Index sel = -1;
    double sel_coef = 0.0;
    Direction sel_dir = Direction::kDown;
    double best_score = kInfinity;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Index j = row.cols[k];
      const double coef = row.coefs[k];
      if (coef == 0.0 || forbidden.active(j, iter)) continue;
      const Direction dir = repair_direction(violation, coef);
      const std::int64_t lock_count = dir == Direction::kDown ? locks.down[j] : locks.up[j];
      const double score = -1.0 + 1.0 / (static_cast<double>(lock_count) + 1.0);
      if (score < best_score) {
        best_score = score;
        sel = j;
        sel_coef = coef;
        sel_dir = dir;
      }
    }
    if (sel < 0) return fail("deadlocked");

    // A variable already pinned at the bound blocking its move cannot make
    // progress; bar it and retry next iteration.
    const bool blocked = sel_dir == Direction::kUp ? x[sel] >= inst.upper[sel] - 1e-9
                                                   : x[sel] <= inst.lower[sel] + 1e-9;
    if (blocked) {
      forbidden.add(sel, iter, sel_dir);
      record(sel, sel_dir, true);
      continue;
    }

    const bool is_fractional =
        std::find(fractional.begin(), fractional.end(), sel) != fractional.end();
    if (is_fractional) {
      apply_rounding(inst, x, sel, sel_dir);
      erase_index(fractional, sel);
    } else if (inst.is_integer(sel)) {
      const double step = sel_dir == Direction::kUp ? 1.0 : -1.0;
      x[sel] = clamp_to_bounds(inst, sel, x[sel] + step);
    } else {
      x[sel] = clamp_to_bounds(inst, sel, optimal_shift_value(x[sel], violation, sel_coef));
    }
    forbidden.on_update(sel, sel_dir);
    record(sel, sel_dir, false);
  }
  return finish(inst, std::move(x), iter, limits, start);
}

}  // namespace mipstart
