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

#include "splitpump/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "splitpump/kernels.hpp"

namespace splitpump {

CMatrix CMatrix::outer(const std::vector<cplx>& v, const std::vector<cplx>& w) {
  CMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MalformedInputError("matrix shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MalformedInputError("matrix shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CMatrix CMatrix::conjugate() const {
  CMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
  return m;
}

cplx CMatrix::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  CMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

std::vector<cplx> CMatrix::column(std::size_t c) const {
  std::vector<cplx> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void CMatrix::set_column(std::size_t c, const std::vector<cplx>& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<cplx> CMatrix::apply(const std::vector<cplx>& v) const {
  if (v.size() != cols_) throw MalformedInputError("matrix-vector dimension mismatch");
  std::vector<cplx> out(rows_);
  kernels::gemm(data(), v.data(), out.data(), rows_, cols_, 1);
  return out;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw MalformedInputError("matrix product dimension mismatch");
  CMatrix c(a.rows(), b.cols());
  kernels::gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  kernels::kron(a.data(), a.rows(), a.cols(), b.data(), b.rows(), b.cols(), out.data());
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw MalformedInputError("matrix shape mismatch in comparison");
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

cplx inner(const std::vector<cplx>& v, const std::vector<cplx>& w) {
  if (v.size() != w.size()) throw MalformedInputError("vector dimension mismatch");
  cplx s{};
  for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
  return s;
}

double norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

namespace {
cplx dominant_phase(const cplx* data, std::size_t n) {
  double best = 0.0;
  cplx pivot = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(data[i]);
    if (a > best + 1e-14) {
      best = a;
      pivot = data[i];
    }
  }
  return best == 0.0 ? cplx{1.0} : pivot / std::abs(pivot);
}
}  // namespace

CMatrix normalize_global_phase(const CMatrix& m) {
  CMatrix out = m;
  const cplx phase = dominant_phase(m.data(), m.rows() * m.cols());
  out *= std::conj(phase);
  return out;
}

std::vector<cplx> normalize_global_phase(const std::vector<cplx>& v) {
  std::vector<cplx> out = v;
  const cplx phase = dominant_phase(v.data(), v.size());
  for (auto& x : out) x *= std::conj(phase);
  return out;
}

}  // namespace splitpump
