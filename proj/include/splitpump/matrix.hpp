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

#ifndef SPLITPUMP_MATRIX_HPP_
#define SPLITPUMP_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "splitpump/types.hpp"

namespace splitpump {

// Dense row-major complex matrix. Value type, immutable in practice once
// built; multiplication and Kronecker products go through the kernels.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix diagonal(const std::vector<cplx>& d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  // |v><w| outer product
  static CMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  CMatrix adjoint() const;
  CMatrix conjugate() const;
  cplx trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);
  std::vector<cplx> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<cplx>& v);

  std::vector<cplx> apply(const std::vector<cplx>& v) const;  // matrix * vector

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);

CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs_diff(const CMatrix& a, const CMatrix& b);

// <v|w> with the first argument conjugated
cplx inner(const std::vector<cplx>& v, const std::vector<cplx>& w);
double norm(const std::vector<cplx>& v);
std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Rotate a global phase so the largest-magnitude entry (first such position
// on ties) is real and positive; used wherever equality is checked up to
// one overall phase.
CMatrix normalize_global_phase(const CMatrix& m);
std::vector<cplx> normalize_global_phase(const std::vector<cplx>& v);

}  // namespace splitpump

#endif  // SPLITPUMP_MATRIX_HPP_
