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

#include "mipstart/pump.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "mipstart/simplex.hpp"

namespace mipstart {
namespace {

using Clock = std::chrono::steady_clock;

void validate(const PumpConfig& cfg) {
  if (cfg.maxiter < 1) throw std::invalid_argument("pump maxiter must be >= 1");
  if (!(cfg.alpha >= 0.0 && cfg.alpha < 1.0)) {
    throw std::invalid_argument("pump alpha must lie in [0, 1)");
  }
  if (!(cfg.t_fraction > 0.0 && cfg.t_fraction <= 1.0)) {
    throw std::invalid_argument("pump t_fraction must lie in (0, 1]");
  }
}

double fractionality(double v) {
  const double f = v - std::floor(v);
  return std::min(f, 1.0 - f);
}

/// Fractional indices ordered most-fractional first, ties to the lower index.
std::vector<Index> by_fractionality(const std::vector<Index>& fractional, const Point& x) {
  std::vector<Index> order = fractional;
  std::stable_sort(order.begin(), order.end(), [&x](Index a, Index b) {
    return fractionality(x[a]) > fractionality(x[b]);
  });
  return order;
}

void flip_entry(const MipInstance& inst, Point& y, const Point& x_frac, Index i) {
  const double fl = std::floor(x_frac[i]);
  const double flipped = round_half(x_frac[i]) == fl ? fl + 1.0 : fl;
  y[i] = clamp_integral(inst, i, flipped);
}

/// Independent final check: snap the integer part and re-test feasibility
/// and integrality, never trusting the loop's own bookkeeping.
HeuristicOutcome verified_success(const MipInstance& inst, Point candidate,
                                  std::int64_t iterations, double int_tol, double feas_tol) {
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

Point truncate_to_vars(const MipInstance& inst, const Point& lp_point) {
  return Point(std::vector<double>(lp_point.values.begin(),
                                   lp_point.values.begin() + inst.num_vars));
}

}  // namespace

CycleKind detect_cycle(const PumpHistory& history, const MipInstance& inst, const Point& y) {
  const auto key = integer_key(inst, y);
  if (history.last.has_value() && key == *history.last) return CycleKind::kOneLength;
  if (history.seen.contains(key)) return CycleKind::kLong;
  return CycleKind::kNone;
}

Point perturb_one_length(const MipInstance& inst, const Point& x_frac, const Point& y,
                         int t_count, double int_tol) {
  Point out = y;
  const std::vector<Index> fractional = fractional_set(inst, x_frac, int_tol);
  const std::vector<Index> order = by_fractionality(fractional, x_frac);
  const std::size_t flips = std::min<std::size_t>(order.size(),
                                                  t_count < 0 ? 0 : static_cast<std::size_t>(t_count));
  for (std::size_t k = 0; k < flips; ++k) flip_entry(inst, out, x_frac, order[k]);
  return out;
}

bool long_cycle_flip(double x_value, double rho) {
  return std::fabs(x_value - round_half(x_value) + std::max(0.0, rho)) > 0.5;
}

Point perturb_long_cycle(const MipInstance& inst, const Point& x_frac, const Point& y,
                         Rng& rng, double int_tol) {
  Point out = y;
  const std::vector<Index> fractional = fractional_set(inst, x_frac, int_tol);
  std::size_t flips = 0;
  for (Index i : fractional) {
    const double rho = uniform_real(rng, -0.3, 0.7);
    if (long_cycle_flip(x_frac[i], rho)) {
      flip_entry(inst, out, x_frac, i);
      ++flips;
    }
  }
  if (flips == 0 && !fractional.empty()) {
    // All draws declined; move the most fractional entry anyway so the
    // iterate cannot re-enter the history unchanged.
    flip_entry(inst, out, x_frac, by_fractionality(fractional, x_frac).front());
  }
  return out;
}

HeuristicOutcome feasibility_pump(const MipInstance& inst, const PumpConfig& cfg,
                                  Rng& rng, LpSolver& solver) {
  validate(cfg);
  const auto start = Clock::now();
  auto done = [&start](HeuristicOutcome out) {
    out.elapsed = Clock::now() - start;
    return out;
  };

  const LinearProgram relaxation = build_relaxation(inst);
  const LpSolution relaxed = solver.solve(relaxation, cfg.lp);
  if (relaxed.status != LpStatus::kOptimal) {
    return done(HeuristicOutcome::Failure(std::string("relaxation ") +
                                          to_string(relaxed.status)));
  }

  Point x_frac = relaxed.point;
  PumpHistory history;
  for (int t = 1; t <= cfg.maxiter; ++t) {
    if (cfg.deadline.has_value() && Clock::now() >= *cfg.deadline) {
      return done(HeuristicOutcome::Failure("time limit", t - 1));
    }

    const std::vector<Index> fractional = fractional_set(inst, x_frac, cfg.int_tol);
    if (fractional.empty()) {
      return done(verified_success(inst, x_frac, t, cfg.int_tol, cfg.feas_tol));
    }

    Point y = x_frac;
    for (Index i : inst.integer_vars) {
      y[i] = clamp_integral(inst, i, round_half(x_frac[i]));
    }

    switch (detect_cycle(history, inst, y)) {
      case CycleKind::kOneLength: {
        const int t_count = std::max(
            1, static_cast<int>(std::ceil(cfg.t_fraction * static_cast<double>(fractional.size()))));
        y = perturb_one_length(inst, x_frac, y, t_count, cfg.int_tol);
        break;
      }
      case CycleKind::kLong:
        y = perturb_long_cycle(inst, x_frac, y, rng, cfg.int_tol);
        break;
      case CycleKind::kNone:
        break;
    }
    assert(!history.last.has_value() || integer_key(inst, y) != *history.last);
    history.add(inst, y);

    const LinearProgram projection = build_l1lp(inst, y, cfg.alpha);
    const LpSolution projected = solver.solve(projection, cfg.lp);
    if (projected.status != LpStatus::kOptimal) {
      return done(HeuristicOutcome::Failure(std::string("l1lp ") +
                                            to_string(projected.status), t));
    }
    if (l1_distance(projected, inst) <= cfg.l1_tol) {
      return done(verified_success(inst, truncate_to_vars(inst, projected.point), t,
                                   cfg.int_tol, cfg.feas_tol));
    }
    x_frac = truncate_to_vars(inst, projected.point);
  }
  return done(HeuristicOutcome::Failure("iteration limit", cfg.maxiter));
}

HeuristicOutcome feasibility_pump(const MipInstance& inst, const PumpConfig& cfg, Rng& rng) {
  SimplexSolver solver;
  return feasibility_pump(inst, cfg, rng, solver);
}

}  // namespace mipstart
