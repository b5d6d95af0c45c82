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

#include "mipstart/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace mipstart::kernels {
namespace {

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double gather_dot_scalar(const std::int32_t* idx, const double* val,
                         std::size_t nnz, const double* x) {
  double acc = 0.0;
  for (std::size_t k = 0; k < nnz; ++k) acc += val[k] * x[idx[k]];
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

constexpr KernelTable kScalar = {
    "scalar", axpy_scalar, dot_scalar, gather_dot_scalar, sum_scalar,
};

const KernelTable* detect() {
  if (const char* env = std::getenv("MIPSTART_KERNELS");
      env != nullptr && std::strcmp(env, "scalar") == 0) {
    return &kScalar;
  }
  if (const KernelTable* avx2 = avx2_table()) return avx2;
  return &kScalar;
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable& active() {
  const KernelTable* table = g_active.load(std::memory_order_acquire);
  if (table == nullptr) {
    table = detect();
    g_active.store(table, std::memory_order_release);
  }
  return *table;
}

void set_active(const KernelTable* table) {
  g_active.store(table, std::memory_order_release);
}

}  // namespace mipstart::kernels
