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

#ifndef SPLITPUMP_SUBSPACES_HPP_
#define SPLITPUMP_SUBSPACES_HPP_

#include <optional>
#include <vector>

#include "splitpump/qmath.hpp"

// Splitting-subspace decompositions: a target N-qubit pure state described as
// the unique unit vector in the intersection of N half-dimensional subspaces,
// together with the per-step basis reorderings the stepping protocol uses.

namespace splitpump::subspaces {

class Subspace {
 public:
  Subspace(std::vector<qmath::Ket> frame, std::size_t ambient_dim);

  const std::vector<qmath::Ket>& frame() const { return frame_; }
  std::size_t dim() const { return frame_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const CMatrix& projector() const { return projector_; }
  CMatrix complement_projector() const;

 private:
  std::vector<qmath::Ket> frame_;
  std::size_t ambient_dim_;
  CMatrix projector_;
};

struct SplittingDecomposition {
  qmath::Ket target;
  qmath::UnitaryOp basis_unitary;   // columns are the |psi_k>, column 0 = target
  std::vector<Subspace> subspaces;  // S_k = basis_unitary * range(Pi^(k))

  std::size_t num_qubits() const { return target.num_qubits(); }

  // Projector onto the intersection of the first ell subspaces; for the
  // nested construction this is the span of the first 2^(N-ell) basis columns.
  CMatrix nested_intersection_projector(std::size_t ell) const;
};

// S_k = range(Pi^(k)), the standard-basis indices whose k-th bit from the
// left is 0 (k is 1-based).
Subspace pi_k_projector(std::size_t k, std::size_t num_qubits);

SplittingDecomposition build_splitting(const qmath::Ket& target);
SplittingDecomposition build_splitting(const qmath::Ket& target, const qmath::UnitaryOp& completion);

// Orthonormal frame for the common intersection, read off the near-1
// eigenspace of the averaged projector.
Subspace intersect(const std::vector<Subspace>& parts);

// U_psi^(ell) = U_psi * P_ell with P_ell exchanging index bits 1 and ell, so
// that S_ell = U_psi^(ell) * range(Pi^(1)) and every step can reuse the same
// first-qubit conditional gates.
qmath::UnitaryOp step_reordering(const SplittingDecomposition& decomp, std::size_t ell);

// Splitting subspaces from N commuting independent signed Pauli generators;
// S_k is the +1 eigenspace of the k-th signed generator and the intersection
// is the stabilizer state.
SplittingDecomposition stabilizer_splitting(const std::vector<qmath::PauliString>& generators);

}  // namespace splitpump::subspaces

#endif  // SPLITPUMP_SUBSPACES_HPP_
