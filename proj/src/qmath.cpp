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

#include "splitpump/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splitpump/kernels.hpp"

namespace splitpump::qmath {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

Ket::Ket(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty() || !is_power_of_two(amplitudes_.size()) || amplitudes_.size() < 2)
    throw MalformedInputError("ket length must be 2^N with N >= 1");
  num_qubits_ = log2_exact(amplitudes_.size());
  const double n = norm(amplitudes_);
  if (std::abs(n - 1.0) > kStructuralTol)
    throw MalformedInputError("ket is not normalized (|norm - 1| = " + std::to_string(std::abs(n - 1.0)) + ")");
}

Ket Ket::basis_state(std::size_t num_qubits, std::size_t index) {
  std::vector<cplx> amp(std::size_t{1} << num_qubits);
  amp.at(index) = 1.0;
  return Ket(std::move(amp));
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square() || entries_.rows() < 2)
    throw MalformedInputError("density matrix must be square with dimension 2^N, N >= 1");
  if (!is_power_of_two(entries_.rows()))
    throw MalformedInputError("density matrix dimension must be a power of two");
  num_qubits_ = log2_exact(entries_.rows());

  double herm = 0.0;
  for (std::size_t r = 0; r < entries_.rows(); ++r)
    for (std::size_t c = r; c < entries_.cols(); ++c)
      herm = std::max(herm, std::abs(entries_(r, c) - std::conj(entries_(c, r))));
  if (herm > kStructuralTol)
    throw MalformedInputError("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
  const cplx tr = entries_.trace();
  if (std::abs(tr - cplx{1.0}) > kStructuralTol)
    throw MalformedInputError("density matrix trace is not 1");
  if (min_eigenvalue(entries_) < -kStructuralTol)
    throw MalformedInputError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
  return DensityMatrix(CMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  CMatrix m = CMatrix::identity(d);
  m *= cplx{1.0 / static_cast<double>(d)};
  return DensityMatrix(std::move(m));
}

UnitaryOp::UnitaryOp(CMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square()) throw MalformedInputError("unitary must be square");
  const CMatrix prod = entries_ * entries_.adjoint();
  const double dev = max_abs_diff(prod, CMatrix::identity(entries_.rows()));
  if (dev > kStructuralTol)
    throw MalformedInputError("matrix is not unitary (max |UU† - I| = " + std::to_string(dev) + ")");
}

UnitaryOp::UnitaryOp(CMatrix entries, Trusted) : entries_(std::move(entries)) {}

UnitaryOp UnitaryOp::identity(std::size_t dim) { return UnitaryOp(CMatrix::identity(dim), Trusted{}); }

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(entries_.adjoint(), Trusted{}); }

CMatrix pauli_matrix(Pauli p) {
  CMatrix m(2, 2);
  switch (p) {
    case Pauli::I: m(0, 0) = 1; m(1, 1) = 1; break;
    case Pauli::X: m(0, 1) = 1; m(1, 0) = 1; break;
    case Pauli::Y: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
    case Pauli::Z: m(0, 0) = 1; m(1, 1) = -1; break;
  }
  return m;
}

PauliString::PauliString(std::vector<Pauli> letters, int sign)
    : letters_(std::move(letters)), sign_(sign) {
  if (letters_.empty()) throw MalformedInputError("empty Pauli string");
  if (sign_ != 1 && sign_ != -1) throw MalformedInputError("Pauli string sign must be +1 or -1");
}

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  std::vector<Pauli> letters;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default: throw MalformedInputError("bad Pauli letter in '" + text + "'");
    }
  }
  return PauliString(std::move(letters), sign);
}

CMatrix PauliString::realize() const {
  CMatrix m = pauli_matrix(letters_[0]);
  for (std::size_t i = 1; i < letters_.size(); ++i) m = kron(m, pauli_matrix(letters_[i]));
  if (sign_ < 0) m *= cplx{-1.0};
  return m;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (num_qubits() != other.num_qubits())
    throw MalformedInputError("Pauli strings act on different register sizes");
  // Two Pauli strings commute iff they anticommute on an even number of sites.
  std::size_t anti = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Pauli a = letters_[i], b = other.letters_[i];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

bool PauliString::same_letters(const PauliString& other) const {
  return letters_ == other.letters_;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Ket tensor(const Ket& a, const Ket& b) { return Ket(kron(a.amplitudes(), b.amplitudes())); }

CMatrix tensor(const CMatrix& a, const CMatrix& b) { return kron(a, b); }

UnitaryOp tensor(const UnitaryOp& a, const UnitaryOp& b) {
  return UnitaryOp(kron(a.entries(), b.entries()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.entries(), b.entries()));
}

CMatrix partial_trace_ancilla_raw(const CMatrix& rho) {
  if (!rho.square() || rho.rows() % 2 != 0)
    throw MalformedInputError("partial trace needs an even square matrix with the ancilla leftmost");
  const std::size_t d = rho.rows() / 2;
  CMatrix out(d, d);
  kernels::ptrace_left(rho.data(), 2, d, out.data());
  return out;
}

DensityMatrix partial_trace_ancilla(const DensityMatrix& rho) {
  return DensityMatrix(partial_trace_ancilla_raw(rho.entries()));
}

UnitaryOp hermitian_exp(const CMatrix& h, double angle, double prefactor) {
  if (!h.square()) throw MalformedInputError("hermitian_exp requires a square matrix");
  double herm = 0.0;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = r; c < h.cols(); ++c)
      herm = std::max(herm, std::abs(h(r, c) - std::conj(h(c, r))));
  if (herm > kStructuralTol)
    throw MalformedInputError("hermitian_exp generator is not Hermitian (deviation " +
                              std::to_string(herm) + ")");

  const EigResult e = eig_hermitian(h);
  const std::size_t n = h.rows();
  CMatrix phases(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = -prefactor * angle * e.eigenvalues[j];
    phases(j, j) = cplx(std::cos(theta), std::sin(theta));
  }
  return UnitaryOp(e.eigenvectors * phases * e.eigenvectors.adjoint());
}

double fidelity(const DensityMatrix& rho, const Ket& psi) {
  if (rho.dim() != psi.dim()) throw MalformedInputError("fidelity dimension mismatch");
  const std::vector<cplx> v = rho.entries().apply(psi.amplitudes());
  const double f = inner(psi.amplitudes(), v).real();
  if (f < -kStructuralTol || f > 1.0 + kStructuralTol)
    throw NumericalError("fidelity outside [0,1]: " + std::to_string(f));
  return std::clamp(f, 0.0, 1.0);
}

DensityMatrix random_density(std::size_t num_qubits, std::uint64_t seed) {
  const std::size_t d = std::size_t{1} << num_qubits;
  Rng rng(seed);
  CMatrix g(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) g(r, c) = rng.complex_normal();
  CMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= cplx{1.0 / tr};
  // clean up the tiny anti-Hermitian roundoff from the product
  for (std::size_t r = 0; r < d; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const cplx avg = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
      rho(r, c) = avg;
      rho(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix(std::move(rho));
}

namespace {

// Two-pass modified Gram-Schmidt of v against the accepted columns.
void orthogonalize(std::vector<cplx>& v, const CMatrix& basis, std::size_t n_cols) {
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t j = 0; j < n_cols; ++j) {
      cplx proj{};
      for (std::size_t r = 0; r < v.size(); ++r) proj += std::conj(basis(r, j)) * v[r];
      for (std::size_t r = 0; r < v.size(); ++r) v[r] -= proj * basis(r, j);
    }
}

}  // namespace

UnitaryOp complete_to_unitary(const std::vector<Ket>& first_columns, std::size_t dim) {
  if (first_columns.empty() || first_columns.size() > dim)
    throw MalformedInputError("complete_to_unitary needs between 1 and dim columns");
  for (const Ket& k : first_columns)
    if (k.dim() != dim) throw MalformedInputError("column dimension mismatch");
  for (std::size_t i = 0; i < first_columns.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const cplx g = inner(first_columns[i].amplitudes(), first_columns[j].amplitudes());
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(g - want) > kFrameTol)
        throw MalformedInputError("supplied columns are not orthonormal");
    }

  CMatrix u(dim, dim);
  std::size_t n_cols = 0;
  for (const Ket& k : first_columns) u.set_column(n_cols++, k.amplitudes());

  for (std::size_t cand = 0; cand < dim && n_cols < dim; ++cand) {
    std::vector<cplx> v(dim);
    v[cand] = 1.0;
    orthogonalize(v, u, n_cols);
    const double r = norm(v);
    if (r <= kRankTol) continue;  // candidate is (nearly) dependent on the accepted set
    for (auto& x : v) x /= r;
    u.set_column(n_cols++, v);
  }
  if (n_cols != dim)
    throw NumericalError("basis completion exhausted the standard basis before filling the space");
  return UnitaryOp(std::move(u));
}

Ket random_ket(std::size_t num_qubits, std::uint64_t seed) {
  const std::size_t d = std::size_t{1} << num_qubits;
  Rng rng(seed);
  std::vector<cplx> v(d);
  for (auto& x : v) x = rng.complex_normal();
  const double n = norm(v);
  for (auto& x : v) x /= n;
  return Ket(std::move(v));
}

UnitaryOp random_unitary(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  CMatrix u(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<cplx> v(dim);
    for (auto& x : v) x = rng.complex_normal();
    orthogonalize(v, u, c);
    const double r = norm(v);
    for (auto& x : v) x /= r;
    u.set_column(c, v);
  }
  return UnitaryOp(std::move(u));
}

CMatrix random_hermitian_unit_norm(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  CMatrix g(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = rng.complex_normal();
  CMatrix h(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  const EigResult e = eig_hermitian(h);
  double spectral = 0.0;
  for (double w : e.eigenvalues) spectral = std::max(spectral, std::abs(w));
  if (spectral > 0.0) h *= cplx{1.0 / spectral};
  return h;
}

namespace {
Ket bell(double a, std::size_t i, double b, std::size_t j) {
  std::vector<cplx> v(4);
  v[i] = a / std::sqrt(2.0);
  v[j] = b / std::sqrt(2.0);
  return Ket(std::move(v));
}
}  // namespace

Ket bell_phi_plus() { return bell(1, 0, 1, 3); }
Ket bell_phi_minus() { return bell(1, 0, -1, 3); }
Ket bell_psi_plus() { return bell(1, 1, 1, 2); }
Ket bell_psi_minus() { return bell(1, 1, -1, 2); }

Ket ghz_state(std::size_t num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  std::vector<cplx> v(d);
  v.front() = 1.0 / std::sqrt(2.0);
  v.back() = 1.0 / std::sqrt(2.0);
  return Ket(std::move(v));
}

Ket zero_state(std::size_t num_qubits) { return Ket::basis_state(num_qubits, 0); }

CMatrix embed_leading(const CMatrix& op, std::size_t total_qubits) {
  const std::size_t d_total = std::size_t{1} << total_qubits;
  if (!op.square() || op.rows() > d_total || d_total % op.rows() != 0)
    throw MalformedInputError("embed_leading shape mismatch");
  if (op.rows() == d_total) return op;
  return kron(op, CMatrix::identity(d_total / op.rows()));
}

CMatrix embed_on_qubit(const CMatrix& op2, std::size_t k, std::size_t total_qubits) {
  if (op2.rows() != 2 || op2.cols() != 2) throw MalformedInputError("embed_on_qubit wants a 2x2 op");
  if (k < 1 || k > total_qubits) throw MalformedInputError("qubit index out of range");
  const std::size_t left = std::size_t{1} << (k - 1);
  const std::size_t right = std::size_t{1} << (total_qubits - k);
  CMatrix m = kron(CMatrix::identity(left), op2);
  return kron(m, CMatrix::identity(right));
}

}  // namespace splitpump::qmath
