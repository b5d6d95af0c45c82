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

// AVX2 kernel lane. This translation unit is the only one compiled with
// -mavx2; nothing here runs unless the dispatcher saw AVX2 in CPUID.

#include "mipstart/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace mipstart::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    __m256d vx = _mm256_loadu_pd(x + i);
    vy = _mm256_add_pd(vy, _mm256_mul_pd(va, vx));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

double gather_dot_avx2(const std::int32_t* idx, const double* val,
                       std::size_t nnz, const double* x) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= nnz; k += 4) {
    const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + k));
    const __m256d gathered = _mm256_i32gather_pd(x, vi, 8);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(val + k), gathered));
  }
  double total = hsum(acc);
  for (; k < nnz; ++k) total += val[k] * x[idx[k]];
  return total;
}

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double total = hsum(acc);
  for (; i < n; ++i) total += a[i];
  return total;
}

constexpr KernelTable kAvx2 = {
    "avx2", axpy_avx2, dot_avx2, gather_dot_avx2, sum_avx2,
};

}  // namespace

const KernelTable* avx2_table() {
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace mipstart::kernels

#else  // non-x86 builds fall back to the scalar lane

namespace mipstart::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace mipstart::kernels

#endif
