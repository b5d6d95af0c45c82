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

#ifndef MIPSTART_KERNELS_HPP_
#define MIPSTART_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

namespace mipstart::kernels {

// Dense and gather kernels behind the simplex tableau updates and row
// activity sums. A scalar reference implementation always exists; wider
// variants are picked once at startup from CPU features. All variants of a
// kernel compute the same quantity, differing only in summation order.

using AxpyFn = void (*)(double alpha, const double* x, double* y, std::size_t n);
using DotFn = double (*)(const double* a, const double* b, std::size_t n);
using GatherDotFn = double (*)(const std::int32_t* idx, const double* val,
                               std::size_t nnz, const double* x);
using SumFn = double (*)(const double* a, std::size_t n);

struct KernelTable {
  const char* name;
  AxpyFn axpy;
  DotFn dot;
  GatherDotFn gather_dot;
  SumFn sum;
};

/// Reference implementations; the oracle every other lane is tested against.
const KernelTable& scalar_table();

/// AVX2 lane, or nullptr when the CPU lacks AVX2.
const KernelTable* avx2_table();

/// The lane in use. Resolved once; MIPSTART_KERNELS=scalar forces the
/// reference lane.
const KernelTable& active();

/// Test hook: override the active lane (nullptr restores auto-detection).
void set_active(const KernelTable* table);

// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), y.size());
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

/// Sparse dot: sum_k val[k] * x[idx[k]].
inline double gather_dot(std::span<const std::int32_t> idx,
                         std::span<const double> val, const double* x) {
  return active().gather_dot(idx.data(), val.data(), idx.size(), x);
}

inline double sum(std::span<const double> a) { return active().sum(a.data(), a.size()); }

}  // namespace mipstart::kernels

#endif  // MIPSTART_KERNELS_HPP_
