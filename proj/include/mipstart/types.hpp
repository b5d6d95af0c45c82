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

#ifndef MIPSTART_TYPES_HPP_
#define MIPSTART_TYPES_HPP_

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace mipstart {

using Index = std::int32_t;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Direction : std::uint8_t { kDown, kUp };

/// Dense assignment of all variables. Entries must stay finite; NaN or
/// infinity in a point is a bug in the producer.
struct Point {
  std::vector<double> values;

  Point() = default;
  explicit Point(std::vector<double> v) : values(std::move(v)) {}
  explicit Point(std::size_t n, double fill = 0.0) : values(n, fill) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  bool all_finite() const {
    for (double v : values) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }
};

/// One sparse constraint row; the sense (<= or =) is carried by the block
/// the row lives in, not by the row itself.
struct SparseRow {
  std::vector<Index> cols;
  std::vector<double> coefs;
  double rhs = 0.0;

  std::size_t size() const { return cols.size(); }
};

enum class RowKind : std::uint8_t { kLessEqual, kEqual };

/// Handle to a row: block kind plus position within that block.
struct RowRef {
  RowKind kind = RowKind::kLessEqual;
  Index index = 0;

  friend bool operator==(const RowRef&, const RowRef&) = default;
};

}  // namespace mipstart

#endif  // MIPSTART_TYPES_HPP_
