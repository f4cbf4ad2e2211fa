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

#include "splitpump/eig.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace splitpump {

EigResult eig_hermitian(const CMatrix& h) {
  if (!h.square()) throw MalformedInputError("eig_hermitian requires a square matrix");
  const std::size_t n = h.rows();

  EigResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors = CMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      res.eigenvectors(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));

  const lapack_int info =
      LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'U', static_cast<lapack_int>(n),
                    res.eigenvectors.data(), static_cast<lapack_int>(n), res.eigenvalues.data());
  if (info != 0)
    throw NumericalError("zheev failed to converge (info=" + std::to_string(info) + ")");
  return res;
}

double min_eigenvalue(const CMatrix& h) {
  const EigResult e = eig_hermitian(h);
  return e.eigenvalues.empty() ? 0.0 : e.eigenvalues.front();
}

}  // namespace splitpump
