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

#ifndef MIPSTART_RANDOM_HPP_
#define MIPSTART_RANDOM_HPP_

#include <cassert>
#include <cstdint>
#include <random>

namespace mipstart {

// All randomized code draws through these helpers instead of the standard
// distributions, whose output is implementation-defined. Identical seeds
// must replay identical runs on any platform.
using Rng = std::mt19937_64;

/// Uniform double in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

/// Uniform integer in [lo, hi], both ends inclusive.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  assert(lo <= hi);
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());  // full 64-bit span
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

inline bool bernoulli(Rng& rng, double p) { return uniform_real(rng, 0.0, 1.0) < p; }

}  // namespace mipstart

#endif  // MIPSTART_RANDOM_HPP_
