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

#ifndef MIPSTART_SIMPLEX_HPP_
#define MIPSTART_SIMPLEX_HPP_

#include "mipstart/lp.hpp"

namespace mipstart {

/// Two-phase primal simplex on a dense tableau with Bland's rule, so the
/// pivot sequence is deterministic and cannot cycle. Bounds are handled by
/// shifting (finite lower), mirroring (upper-only) or splitting (free);
/// two-sided bounds add one row. Desk-scale instances only.
///
/// A solver instance is single-use state-free: solve() may be called
/// repeatedly but each call is independent.
class SimplexSolver final : public LpSolver {
 public:
  LpSolution solve(const LinearProgram& lp, const LpSolverConfig& config) override;
};

}  // namespace mipstart

#endif  // MIPSTART_SIMPLEX_HPP_
