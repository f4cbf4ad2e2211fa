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

#ifndef SPLITPUMP_KERNELS_HPP_
#define SPLITPUMP_KERNELS_HPP_

#include <cstddef>

#include "splitpump/types.hpp"

// Dense complex kernels over row-major buffers. Each kernel has a serial
// reference implementation and an OpenMP variant; the unqualified entry
// points dispatch on problem size. The serial versions are the ground truth
// the parallel ones are tested against.

namespace splitpump::kernels {

// Problem-size floor (in flop-like units) below which dispatch stays serial.
std::size_t parallel_grain();
void set_parallel_grain(std::size_t grain);

namespace serial {

// c[m x n] = a[m x k] * b[k x n]
void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);

// out[(ra*rb) x (ca*cb)] = a (x) b, first factor slowest-varying
void kron(const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb, cplx* out);

// out[d x d] = sum_i rho[(i*d + r), (i*d + c)] for i < d_traced; rho is
// (d_traced*d) x (d_traced*d) with the traced factor slowest-varying.
void ptrace_left(const cplx* rho, std::size_t d_traced, std::size_t d, cplx* out);

}  // namespace serial

namespace parallel {

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);
void kron(const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb, cplx* out);
void ptrace_left(const cplx* rho, std::size_t d_traced, std::size_t d, cplx* out);

}  // namespace parallel

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);
void kron(const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb, cplx* out);
void ptrace_left(const cplx* rho, std::size_t d_traced, std::size_t d, cplx* out);

}  // namespace splitpump::kernels

#endif  // SPLITPUMP_KERNELS_HPP_
