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

// Times the serial reference kernels against their OpenMP variants.
// Usage: splitpump_bench [--quick]

#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "splitpump/kernels.hpp"
#include "splitpump/rng.hpp"

namespace {

using splitpump::cplx;
using splitpump::Rng;

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

std::vector<cplx> random_buffer(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<cplx> v(n);
  for (auto& x : v) x = rng.complex_normal();
  return v;
}

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now();
    fn();
    best = std::min(best, now() - t0);
  }
  return best;
}

void report(const char* name, std::size_t d, double t_serial, double t_parallel) {
  std::printf("%-12s d=%4zu   serial %9.3f ms   openmp %9.3f ms   speedup %.2fx\n", name, d,
              1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int reps = quick ? 2 : 5;
  const std::vector<std::size_t> dims = quick ? std::vector<std::size_t>{64, 128}
                                              : std::vector<std::size_t>{64, 128, 256, 512};

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif

  namespace k = splitpump::kernels;
  for (std::size_t d : dims) {
    const auto a = random_buffer(d * d, 11 + d);
    const auto b = random_buffer(d * d, 23 + d);
    std::vector<cplx> c(d * d);

    const double ts = time_best_of(reps, [&] { k::serial::gemm(a.data(), b.data(), c.data(), d, d, d); });
    const double tp = time_best_of(reps, [&] { k::parallel::gemm(a.data(), b.data(), c.data(), d, d, d); });
    report("gemm", d, ts, tp);
  }

  for (std::size_t d : dims) {
    const auto a = random_buffer(d * d, 31 + d);
    const auto b = random_buffer(16, 5);
    std::vector<cplx> out(d * d * 16);
    const double ts =
        time_best_of(reps, [&] { k::serial::kron(a.data(), d, d, b.data(), 4, 4, out.data()); });
    const double tp =
        time_best_of(reps, [&] { k::parallel::kron(a.data(), d, d, b.data(), 4, 4, out.data()); });
    report("kron(x16)", d, ts, tp);
  }

  for (std::size_t d : dims) {
    const auto rho = random_buffer(4 * d * d, 41 + d);
    std::vector<cplx> out(d * d);
    const double ts =
        time_best_of(reps, [&] { k::serial::ptrace_left(rho.data(), 2, d, out.data()); });
    const double tp =
        time_best_of(reps, [&] { k::parallel::ptrace_left(rho.data(), 2, d, out.data()); });
    report("ptrace", d, ts, tp);
  }

  return 0;
}
