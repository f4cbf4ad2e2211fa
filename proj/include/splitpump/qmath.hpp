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

#ifndef SPLITPUMP_QMATH_HPP_
#define SPLITPUMP_QMATH_HPP_

#include <cstdint>
#include <vector>

#include "splitpump/eig.hpp"
#include "splitpump/matrix.hpp"
#include "splitpump/rng.hpp"
#include "splitpump/types.hpp"

// Dense complex linear algebra over tensor-product qubit spaces. Index
// convention everywhere: the FIRST tensor factor is the slowest-varying
// index, so qubit 1 is the most significant bit of a standard-basis index
// and an ancilla tensored on the left occupies the top bit.

namespace splitpump::qmath {

// Unit vector in a 2^N-dimensional complex space.
class Ket {
 public:
  explicit Ket(std::vector<cplx> amplitudes);

  static Ket basis_state(std::size_t num_qubits, std::size_t index);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<cplx> amplitudes_;
  std::size_t num_qubits_;
};

// Hermitian, positive-semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix pure(const Ket& psi);
  static DensityMatrix maximally_mixed(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }

 private:
  CMatrix entries_;
  std::size_t num_qubits_;
};

class UnitaryOp {
 public:
  explicit UnitaryOp(CMatrix entries);

  static UnitaryOp identity(std::size_t dim);

  std::size_t dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }
  UnitaryOp adjoint() const;

 private:
  struct Trusted {};
  UnitaryOp(CMatrix entries, Trusted);

  CMatrix entries_;
};

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

CMatrix pauli_matrix(Pauli p);  // 2x2

// Signed multi-qubit Pauli operator, e.g. -X1X2.
class PauliString {
 public:
  PauliString(std::vector<Pauli> letters, int sign);

  static PauliString parse(const std::string& text);  // e.g. "-XXI", "+ZZ"

  std::size_t num_qubits() const { return letters_.size(); }
  int sign() const { return sign_; }
  const std::vector<Pauli>& letters() const { return letters_; }

  CMatrix realize() const;  // sign * (letter_1 (x) ... (x) letter_N)
  bool commutes_with(const PauliString& other) const;
  bool same_letters(const PauliString& other) const;

 private:
  std::vector<Pauli> letters_;
  int sign_;
};

// Kronecker products, first factor slowest-varying.
Ket tensor(const Ket& a, const Ket& b);
CMatrix tensor(const CMatrix& a, const CMatrix& b);
UnitaryOp tensor(const UnitaryOp& a, const UnitaryOp& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// tr over the leftmost qubit of an (ancilla (x) register) state.
DensityMatrix partial_trace_ancilla(const DensityMatrix& rho);
CMatrix partial_trace_ancilla_raw(const CMatrix& rho);

// exp(-i * prefactor * angle * h) for Hermitian h, via eigendecomposition.
UnitaryOp hermitian_exp(const CMatrix& h, double angle, double prefactor);

// tr(rho |psi><psi|), clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const Ket& psi);

// Ginibre sample: normalize G G† for a complex Gaussian matrix G.
DensityMatrix random_density(std::size_t num_qubits, std::uint64_t seed);

// Unitary whose leading columns are the supplied orthonormal kets; the rest
// is a deterministic Gram-Schmidt sweep over the standard basis, skipping
// candidates whose residual falls below 1e-8.
UnitaryOp complete_to_unitary(const std::vector<Ket>& first_columns, std::size_t dim);

// Test-harness samplers (all deterministic in the seed).
Ket random_ket(std::size_t num_qubits, std::uint64_t seed);
UnitaryOp random_unitary(std::size_t dim, std::uint64_t seed);
CMatrix random_hermitian_unit_norm(std::size_t dim, std::uint64_t seed);

// Named states.
Ket bell_phi_plus();
Ket bell_phi_minus();
Ket bell_psi_plus();
Ket bell_psi_minus();
Ket ghz_state(std::size_t num_qubits);
Ket zero_state(std::size_t num_qubits);

// op acting on the leading qubits of an N-qubit register, identity on the rest.
CMatrix embed_leading(const CMatrix& op, std::size_t total_qubits);
// single-qubit op on qubit k (1-based, counted from the left).
CMatrix embed_on_qubit(const CMatrix& op2, std::size_t k, std::size_t total_qubits);

}  // namespace splitpump::qmath

#endif  // SPLITPUMP_QMATH_HPP_
