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

#ifndef MIPSTART_HEURISTICS_HPP_
#define MIPSTART_HEURISTICS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mipstart/instance.hpp"
#include "mipstart/random.hpp"
#include "mipstart/types.hpp"

namespace mipstart {

struct HeuristicOutcome {
  enum class Status : std::uint8_t { kSuccess, kFailure };

  Status status = Status::kFailure;
  Point point;             // present on success
  double objective = 0.0;  // original sense, success only
  std::int64_t iterations = 0;
  std::chrono::duration<double> elapsed{0.0};
  std::string failure_reason;  // failure only

  bool success() const { return status == Status::kSuccess; }

  static HeuristicOutcome Success(Point point, double objective, std::int64_t iterations);
  static HeuristicOutcome Failure(std::string reason, std::int64_t iterations = 0);
};

/// Anti-cycle list for Shifting: a variable selected while pinned at the
/// bound blocking its direction is barred from selection for `window`
/// iterations, or until some update moves it the other way.
struct ForbiddenList {
  struct Entry {
    std::int64_t expiry;     // active while current iteration < expiry
    Direction blocked_dir;   // the move that was blocked at the bound
  };

  std::unordered_map<Index, Entry> entries;
  std::int64_t window = 50;

  bool active(Index j, std::int64_t iteration) const {
    auto it = entries.find(j);
    return it != entries.end() && iteration < it->second.expiry;
  }
  void add(Index j, std::int64_t iteration, Direction blocked) {
    entries[j] = Entry{iteration + window, blocked};
  }
  void on_update(Index j, Direction moved) {
    auto it = entries.find(j);
    if (it != entries.end() && it->second.blocked_dir != moved) entries.erase(it);
  }
};

/// Step log a test can attach to replay Shifting's selection decisions.
struct ShiftingTrace {
  struct Step {
    std::int64_t iteration;
    Index var;
    Direction dir;
    bool added_to_forbidden;  // selected while blocked at its bound
  };
  std::vector<Step> steps;
};

struct HeuristicLimits {
  double int_tol = kIntegralityTol;
  double feas_tol = kFeasibilityTol;
  std::int64_t extra_iterations = 1000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  ShiftingTrace* trace = nullptr;
};

enum class Roundability : std::uint8_t { kDown, kUp, kNone };

/// Down when no row down-locks j, else up when no row up-locks j, else none.
/// Zero locks in a direction means rounding that way cannot violate any row.
Roundability trivially_roundable(const MipInstance& inst, const Point& x, Index j,
                                 const LocksProfile& locks);

/// Rounds every fractional integer variable in the lock-free direction;
/// fails as soon as one variable has no lock-free direction. The input must
/// be LP-feasible.
HeuristicOutcome simple_rounding(const MipInstance& inst, const Point& x0,
                                 const HeuristicLimits& limits = {});

/// Lock-guided rounding that tolerates infeasible intermediate points:
/// feasible steps round the max-lock variable, infeasible steps scan the
/// most violated row for the min-lock fractional variable.
HeuristicOutcome rounding(const MipInstance& inst, const Point& x0,
                          const HeuristicLimits& limits = {});

/// Rounding extended with repair moves on any variable of a violated row:
/// +-1 steps for integer variables, the clamped optimal shift for continuous
/// ones, with the forbidden-list anti-cycle rule.
HeuristicOutcome shifting(const MipInstance& inst, const Point& x0, Rng& rng,
                          const HeuristicLimits& limits = {});

/// Value that zeroes the selected row's violation when moving only x_j:
/// x_old - violation / coef, before clamping to the variable's bounds.
inline double optimal_shift_value(double x_old, double violation, double coef) {
  return x_old - violation / coef;
}

}  // namespace mipstart

#endif  // MIPSTART_HEURISTICS_HPP_
