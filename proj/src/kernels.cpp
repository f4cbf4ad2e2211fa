// Copyright 2026 The splitpump developers
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

#include "splitpump/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace splitpump::kernels {

namespace {
std::atomic<std::size_t> g_grain{std::size_t{1} << 18};

bool use_parallel(std::size_t work) {
#ifdef _OPENMP
  return work >= g_grain.load(std::memory_order_relaxed) && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}
}  // namespace

std::size_t parallel_grain() { return g_grain.load(std::memory_order_relaxed); }
void set_parallel_grain(std::size_t grain) { g_grain.store(grain, std::memory_order_relaxed); }

namespace serial {

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void kron(const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb, cplx* out) {
  const std::size_t cols = ca * cb;
  for (std::size_t ia = 0; ia < ra; ++ia)
    for (std::size_t ib = 0; ib < rb; ++ib) {
      cplx* row = out + (ia * rb + ib) * cols;
      const cplx* arow = a + ia * ca;
      const cplx* brow = b + ib * cb;
      for (std::size_t ja = 0; ja < ca; ++ja)
        for (std::size_t jb = 0; jb < cb; ++jb) row[ja * cb + jb] = arow[ja] * brow[jb];
    }
}

void ptrace_left(const cplx* rho, std::size_t d_traced, std::size_t d, cplx* out) {
  const std::size_t full = d_traced * d;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      cplx acc{};
      for (std::size_t i = 0; i < d_traced; ++i) acc += rho[(i * d + r) * full + (i * d + c)];
      out[r * d + c] = acc;
    }
}

}  // namespace serial

namespace parallel {

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
    cplx* crow = c + static_cast<std::size_t>(i) * n;
    std::fill(crow, crow + n, cplx{});
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[static_cast<std::size_t>(i) * k + p];
      if (aip == cplx{}) continue;
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void kron(const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb, cplx* out) {
  const std::size_t rows = ra * rb;
  const std::size_t cols = ca * cb;
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows); ++r) {
    const std::size_t ia = static_cast<std::size_t>(r) / rb;
    const std::size_t ib = static_cast<std::size_t>(r) % rb;
    cplx* row = out + static_cast<std::size_t>(r) * cols;
    const cplx* arow = a + ia * ca;
    const cplx* brow = b + ib * cb;
    for (std::size_t ja = 0; ja < ca; ++ja)
      for (std::size_t jb = 0; jb < cb; ++jb) row[ja * cb + jb] = arow[ja] * brow[jb];
  }
}

void ptrace_left(const cplx* rho, std::size_t d_traced, std::size_t d, cplx* out) {
  const std::size_t full = d_traced * d;
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(d); ++r)
    for (std::size_t c = 0; c < d; ++c) {
      cplx acc{};
      for (std::size_t i = 0; i < d_traced; ++i)
        acc += rho[(i * d + static_cast<std::size_t>(r)) * full + (i * d + c)];
      out[static_cast<std::size_t>(r) * d + c] = acc;
    }
}

}  // namespace parallel

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n) {
  if (use_parallel(m * k * n))
    parallel::gemm(a, b, c, m, k, n);
  else
    serial::gemm(a, b, c, m, k, n);
}

void kron(const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb, cplx* out) {
  if (use_parallel(ra * ca * rb * cb))
    parallel::kron(a, ra, ca, b, rb, cb, out);
  else
    serial::kron(a, ra, ca, b, rb, cb, out);
}

void ptrace_left(const cplx* rho, std::size_t d_traced, std::size_t d, cplx* out) {
  if (use_parallel(d * d * d_traced))
    parallel::ptrace_left(rho, d_traced, d, out);
  else
    serial::ptrace_left(rho, d_traced, d, out);
}

}  // namespace splitpump::kernels
