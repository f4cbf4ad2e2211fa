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

#ifndef SPLITPUMP_TESTS_HELPERS_HPP_
#define SPLITPUMP_TESTS_HELPERS_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "splitpump/eig.hpp"
#include "splitpump/matrix.hpp"
#include "splitpump/rng.hpp"

// Independent oracles for the test suites. These deliberately avoid the
// library code paths they are used to check.

namespace splitpump::test {

// plain i-j-k triple loop, no zero skipping, no parallelism
inline CMatrix oracle_matmul(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

// definitional Kronecker indexing
inline CMatrix oracle_kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c)
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
  return out;
}

// explicit sum over the ancilla basis indices
inline CMatrix oracle_ptrace_ancilla(const CMatrix& rho) {
  const std::size_t d = rho.rows() / 2;
  CMatrix out(d, d);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, c) += rho(a * d + r, a * d + c);
  return out;
}

// truncated power series for exp(-i * c * h)
inline CMatrix oracle_exp_series(const CMatrix& h, double c, int terms = 30) {
  const std::size_t n = h.rows();
  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  const cplx factor = cplx(0.0, -1.0) * c;
  for (int k = 1; k <= terms; ++k) {
    term = oracle_matmul(term, h);
    term *= factor / static_cast<double>(k);
    result += term;
  }
  return result;
}

inline double diff_up_to_phase(const CMatrix& a, const CMatrix& b) {
  return max_abs_diff(normalize_global_phase(a), normalize_global_phase(b));
}

// rank of a Hermitian projector-like matrix: eigenvalues rounded at 1e-8
inline std::size_t oracle_projector_rank(const CMatrix& p) {
  const EigResult e = eig_hermitian(p);
  std::size_t rank = 0;
  for (double w : e.eigenvalues) {
    if (std::abs(w - 1.0) <= 1e-8)
      ++rank;
    else if (std::abs(w) > 1e-8)
      return static_cast<std::size_t>(-1);  // not a projector
  }
  return rank;
}

// Intersection of subspaces from the rank of the stacked complements:
// v is in every range(P_k) iff (I - P_k) v = 0 for all k, so the null space
// of the Gram matrix sum_k (I - P_k) is the intersection.
struct OracleIntersection {
  std::size_t dim;
  std::vector<std::vector<cplx>> frame;
};

inline OracleIntersection oracle_intersection(const std::vector<CMatrix>& projectors) {
  const std::size_t d = projectors.front().rows();
  CMatrix gram(d, d);
  for (const CMatrix& p : projectors) gram += CMatrix::identity(d) - p;
  const EigResult e = eig_hermitian(gram);
  OracleIntersection out{0, {}};
  for (std::size_t j = 0; j < d; ++j)
    if (e.eigenvalues[j] <= 1e-8) {
      ++out.dim;
      out.frame.push_back(e.eigenvectors.column(j));
    }
  return out;
}

// random matrix with dyadic entries so products are exact in binary floats
inline CMatrix dyadic_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  static const double vals[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  Rng rng(seed);
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = cplx(vals[rng.next_u64() % 7], vals[rng.next_u64() % 7]);
  return m;
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.complex_normal();
  return m;
}

}  // namespace splitpump::test

#endif  // SPLITPUMP_TESTS_HELPERS_HPP_
