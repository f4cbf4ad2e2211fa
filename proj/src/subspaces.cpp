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

#include "splitpump/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace splitpump::subspaces {

using qmath::Ket;
using qmath::PauliString;
using qmath::UnitaryOp;

Subspace::Subspace(std::vector<Ket> frame, std::size_t ambient_dim)
    : frame_(std::move(frame)), ambient_dim_(ambient_dim) {
  if (frame_.empty()) throw MalformedInputError("subspace frame is empty");
  for (const Ket& v : frame_)
    if (v.dim() != ambient_dim_) throw MalformedInputError("frame vector dimension mismatch");
  for (std::size_t i = 0; i < frame_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(inner(frame_[i].amplitudes(), frame_[j].amplitudes())) > kFrameTol)
        throw MalformedInputError("subspace frame is not orthonormal");

  projector_ = CMatrix(ambient_dim_, ambient_dim_);
  for (const Ket& v : frame_) projector_ += CMatrix::outer(v.amplitudes(), v.amplitudes());

  const double idem = max_abs_diff(projector_ * projector_, projector_);
  const double herm = max_abs_diff(projector_, projector_.adjoint());
  if (idem > kFrameTol || herm > kFrameTol)
    throw NumericalError("subspace projector failed P^2 = P = P†");
}

CMatrix Subspace::complement_projector() const {
  return CMatrix::identity(ambient_dim_) - projector_;
}

CMatrix SplittingDecomposition::nested_intersection_projector(std::size_t ell) const {
  const std::size_t n = num_qubits();
  if (ell < 1 || ell > n) throw MalformedInputError("step index out of range");
  // bits 1..ell all zero <=> index below 2^(N-ell)
  const std::size_t keep = std::size_t{1} << (n - ell);
  CMatrix p(target.dim(), target.dim());
  const CMatrix& u = basis_unitary.entries();
  for (std::size_t j = 0; j < keep; ++j) {
    const std::vector<cplx> col = u.column(j);
    p += CMatrix::outer(col, col);
  }
  return p;
}

Subspace pi_k_projector(std::size_t k, std::size_t num_qubits) {
  if (k < 1 || k > num_qubits) throw MalformedInputError("subspace index k out of range");
  const std::size_t d = std::size_t{1} << num_qubits;
  const std::size_t bit = std::size_t{1} << (num_qubits - k);  // k-th bit from the left
  std::vector<Ket> frame;
  frame.reserve(d / 2);
  for (std::size_t i = 0; i < d; ++i)
    if ((i & bit) == 0) frame.push_back(Ket::basis_state(num_qubits, i));
  return Subspace(std::move(frame), d);
}

namespace {

std::vector<std::size_t> pi_k_indices(std::size_t k, std::size_t num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  const std::size_t bit = std::size_t{1} << (num_qubits - k);
  std::vector<std::size_t> idx;
  idx.reserve(d / 2);
  for (std::size_t i = 0; i < d; ++i)
    if ((i & bit) == 0) idx.push_back(i);
  return idx;
}

SplittingDecomposition from_basis_unitary(const Ket& target, UnitaryOp basis_unitary) {
  const std::size_t n = target.num_qubits();
  std::vector<Subspace> parts;
  parts.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Ket> frame;
    for (std::size_t j : pi_k_indices(k, n)) frame.push_back(Ket(basis_unitary.entries().column(j)));
    parts.emplace_back(std::move(frame), target.dim());
  }
  return SplittingDecomposition{target, std::move(basis_unitary), std::move(parts)};
}

}  // namespace

SplittingDecomposition build_splitting(const Ket& target) {
  return from_basis_unitary(target, qmath::complete_to_unitary({target}, target.dim()));
}

SplittingDecomposition build_splitting(const Ket& target, const UnitaryOp& completion) {
  if (completion.dim() != target.dim())
    throw MalformedInputError("completion dimension does not match target");
  const std::vector<cplx> first = completion.entries().column(0);
  double dev = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i)
    dev = std::max(dev, std::abs(first[i] - target[i]));
  if (dev > kFrameTol)
    throw MalformedInputError("completion's first column differs from the target");
  return from_basis_unitary(target, completion);
}

Subspace intersect(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw MalformedInputError("intersect needs at least one subspace");
  const std::size_t d = parts.front().ambient_dim();
  for (const Subspace& s : parts)
    if (s.ambient_dim() != d) throw MalformedInputError("ambient dimension mismatch in intersect");

  CMatrix avg(d, d);
  for (const Subspace& s : parts) avg += s.projector();
  avg *= cplx{1.0 / static_cast<double>(parts.size())};

  const EigResult e = eig_hermitian(avg);
  std::vector<Ket> frame;
  for (std::size_t j = 0; j < d; ++j)
    if (e.eigenvalues[j] > 1.0 - kRankTol) frame.push_back(Ket(e.eigenvectors.column(j)));
  if (frame.empty()) throw NumericalError("subspaces have trivial intersection");
  return Subspace(std::move(frame), d);
}

UnitaryOp step_reordering(const SplittingDecomposition& decomp, std::size_t ell) {
  const std::size_t n = decomp.num_qubits();
  if (ell < 1 || ell > n) throw MalformedInputError("step index out of range");
  if (ell == 1) return decomp.basis_unitary;

  const std::size_t d = decomp.target.dim();
  const std::size_t b1 = std::size_t{1} << (n - 1);    // bit 1 (leftmost)
  const std::size_t bl = std::size_t{1} << (n - ell);  // bit ell
  const CMatrix& u = decomp.basis_unitary.entries();
  CMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t sj = j;
    const bool v1 = (j & b1) != 0;
    const bool vl = (j & bl) != 0;
    if (v1 != vl) sj = (j ^ b1) ^ bl;  // exchange bit 1 and bit ell
    out.set_column(j, u.column(sj));
  }
  return UnitaryOp(std::move(out));
}

SplittingDecomposition stabilizer_splitting(const std::vector<PauliString>& generators) {
  if (generators.empty()) throw MalformedInputError("no stabilizer generators supplied");
  const std::size_t n = generators.front().num_qubits();
  if (generators.size() != n)
    throw MalformedInputError("need exactly N generators for an N-qubit register");
  for (const PauliString& g : generators)
    if (g.num_qubits() != n) throw MalformedInputError("generator register size mismatch");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!generators[i].commutes_with(generators[j]))
        throw MalformedInputError("stabilizer generators do not commute");

  // Independence over GF(2) of the (x|z) symplectic rows.
  {
    std::vector<std::uint64_t> rows;
    for (const PauliString& g : generators) {
      std::uint64_t x = 0, z = 0;
      for (std::size_t q = 0; q < n; ++q) {
        const qmath::Pauli p = g.letters()[q];
        if (p == qmath::Pauli::X || p == qmath::Pauli::Y) x |= std::uint64_t{1} << q;
        if (p == qmath::Pauli::Z || p == qmath::Pauli::Y) z |= std::uint64_t{1} << q;
      }
      rows.push_back(x << n | z);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n; ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      std::size_t pivot = rank;
      while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
      ++rank;
    }
    if (rank != n) throw MalformedInputError("stabilizer generators are not independent");
  }

  const std::size_t d = std::size_t{1} << n;
  std::vector<CMatrix> realized;
  realized.reserve(n);
  for (const PauliString& g : generators) realized.push_back(g.realize());

  // Joint eigenbasis ordered so that column j has generator-k eigenvalue
  // (-1)^(bit k of j); column 0 is then the stabilizer state itself.
  CMatrix basis(d, d);
  const CMatrix ident = CMatrix::identity(d);
  for (std::size_t j = 0; j < d; ++j) {
    CMatrix proj = ident;
    for (std::size_t k = 0; k < n; ++k) {
      const bool negative = (j >> (n - 1 - k)) & 1;
      CMatrix half = ident;
      if (negative)
        half -= realized[k];
      else
        half += realized[k];
      half *= cplx{0.5};
      proj = proj * half;
    }
    // proj is rank one; pull out its unit vector from the heaviest column
    std::size_t best = 0;
    double best_diag = -1.0;
    for (std::size_t i = 0; i < d; ++i)
      if (proj(i, i).real() > best_diag) {
        best_diag = proj(i, i).real();
        best = i;
      }
    if (best_diag < 1.0 / (2.0 * static_cast<double>(d)))
      throw NumericalError("joint eigenprojector is not rank one");
    std::vector<cplx> col = proj.column(best);
    const double r = norm(col);
    for (auto& x : col) x /= r;
    col = normalize_global_phase(col);
    basis.set_column(j, col);
  }

  const Ket target(basis.column(0));
  UnitaryOp basis_unitary{std::move(basis)};

  // Frames for the +1 eigenspaces via eigendecomposition of (I + M_k)/2.
  std::vector<Subspace> parts;
  parts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CMatrix half = ident + realized[k];
    half *= cplx{0.5};
    const EigResult e = eig_hermitian(half);
    std::vector<Ket> frame;
    for (std::size_t j = 0; j < d; ++j)
      if (e.eigenvalues[j] > 0.5) frame.push_back(Ket(e.eigenvectors.column(j)));
    if (frame.size() != d / 2)
      throw NumericalError("stabilizer eigenspace has dimension " + std::to_string(frame.size()) +
                           ", expected " + std::to_string(d / 2));
    parts.emplace_back(std::move(frame), d);
  }

  return SplittingDecomposition{target, std::move(basis_unitary), std::move(parts)};
}

}  // namespace splitpump::subspaces
