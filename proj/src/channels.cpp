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

#include "splitpump/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace splitpump::channels {

using qmath::DensityMatrix;
using qmath::Ket;
using qmath::UnitaryOp;
using subspaces::Subspace;

namespace {

CMatrix ket_proj_2x2(int which) {
  CMatrix p(2, 2);
  p(which, which) = 1.0;
  return p;
}

// Symmetrize away the anti-Hermitian roundoff of A rho A† sums.
void resymmetrize(CMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      const cplx avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  }
}

void check_perp(const CMatrix& u, const CMatrix& proj, std::size_t ambient) {
  const CMatrix comp = CMatrix::identity(ambient) - proj;
  const double dev = max_abs_diff(u * comp * u.adjoint(), proj);
  if (dev > kDerivedTol)
    throw MalformedInputError("u_perp does not map the complement onto the subspace (deviation " +
                              std::to_string(dev) + ")");
}

}  // namespace

KrausChannel::KrausChannel(std::vector<CMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw MalformedInputError("Kraus channel needs at least one operator");
  const std::size_t d = operators_.front().rows();
  for (const CMatrix& m : operators_)
    if (!m.square() || m.rows() != d) throw MalformedInputError("Kraus operator shape mismatch");
  CMatrix sum(d, d);
  for (const CMatrix& m : operators_) sum += m.adjoint() * m;
  const double dev = max_abs_diff(sum, CMatrix::identity(d));
  if (dev > kDerivedTol)
    throw MalformedInputError("Kraus completeness violated (max |sum M†M - I| = " +
                              std::to_string(dev) + ")");
}

CMatrix KrausChannel::apply_raw(const CMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim())
    throw MalformedInputError("state dimension does not match channel");
  CMatrix out(dim(), dim());
  for (const CMatrix& m : operators_) out += m * rho * m.adjoint();
  resymmetrize(out);
  return out;
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply_raw(rho.entries()));
}

CnotPair canonical_cnots(std::size_t num_register_qubits) {
  if (num_register_qubits < 1) throw MalformedInputError("register needs at least one qubit");
  const std::size_t rest = std::size_t{1} << (num_register_qubits - 1);
  const CMatrix id_rest = CMatrix::identity(rest);
  const CMatrix id_reg = CMatrix::identity(2 * rest);
  const CMatrix x = qmath::pauli_matrix(qmath::Pauli::X);

  // c_out = I (x) |0><0| + X (x) |1><1| on ancilla (x) first register qubit
  CMatrix c_out = kron(CMatrix::identity(2), kron(ket_proj_2x2(0), id_rest)) +
                  kron(x, kron(ket_proj_2x2(1), id_rest));
  // c_in = |1><1| (x) I + |0><0| (x) X_1
  CMatrix c_in = kron(ket_proj_2x2(1), id_reg) + kron(ket_proj_2x2(0), kron(x, id_rest));
  return CnotPair{UnitaryOp(std::move(c_in)), UnitaryOp(std::move(c_out))};
}

UnitaryOp u_perp(const Subspace& s) {
  std::vector<std::size_t> pairing(s.dim());
  std::iota(pairing.begin(), pairing.end(), 0);
  return u_perp(s, pairing);
}

UnitaryOp u_perp(const Subspace& s, const std::vector<std::size_t>& pairing) {
  const std::size_t d = s.ambient_dim();
  if (2 * s.dim() != d)
    throw MalformedInputError("u_perp needs a half-dimensional subspace");
  if (pairing.size() != s.dim()) throw MalformedInputError("pairing size mismatch");
  std::vector<bool> seen(s.dim(), false);
  for (std::size_t p : pairing) {
    if (p >= s.dim() || seen[p]) throw MalformedInputError("pairing is not a permutation");
    seen[p] = true;
  }

  // Complement frame comes from completing the frame of S to a full basis.
  const UnitaryOp full = qmath::complete_to_unitary(s.frame(), d);
  CMatrix u(d, d);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::vector<cplx> si = full.entries().column(pairing[i]);
    const std::vector<cplx> ci = full.entries().column(s.dim() + i);
    u += CMatrix::outer(si, ci);
    u += CMatrix::outer(ci, si);
  }
  return UnitaryOp(std::move(u));
}

KrausChannel pumping_channel(const Subspace& s, const UnitaryOp& u_perp) {
  if (u_perp.dim() != s.ambient_dim()) throw MalformedInputError("u_perp dimension mismatch");
  check_perp(u_perp.entries(), s.projector(), s.ambient_dim());
  return KrausChannel({s.projector(), u_perp.entries() * s.complement_projector()});
}

MeasurementRecord measurement_feedback_step(const DensityMatrix& rho, const Subspace& s,
                                            const UnitaryOp& u_perp, std::uint64_t seed) {
  if (rho.dim() != s.ambient_dim()) throw MalformedInputError("state dimension mismatch");
  check_perp(u_perp.entries(), s.projector(), s.ambient_dim());

  const CMatrix& proj = s.projector();
  double p = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) p += (proj(r, c) * rho.entries()(c, r)).real();
  if (p < -kStructuralTol || p > 1.0 + kStructuralTol)
    throw NumericalError("branch probability outside [0,1]: " + std::to_string(p));
  p = std::clamp(p, 0.0, 1.0);

  Rng rng(seed);
  const bool in_s = rng.uniform() < p;
  CMatrix post = in_s ? proj * rho.entries() * proj
                      : u_perp.entries() * (s.complement_projector() * rho.entries() *
                                            s.complement_projector()) *
                            u_perp.entries().adjoint();
  const double p_branch = in_s ? p : 1.0 - p;
  post *= cplx{1.0 / p_branch};
  resymmetrize(post);
  return MeasurementRecord{in_s ? std::size_t{0} : std::size_t{1}, p_branch,
                           DensityMatrix(std::move(post))};
}

GeneralizedGatePair build_generalized(const CMatrix& d_c, const CMatrix& o_c, const UnitaryOp& w,
                                      const UnitaryOp& u1_tilde, const UnitaryOp& u2_tilde,
                                      const UnitaryOp& v1_tilde, const UnitaryOp& v2_tilde,
                                      const UnitaryOp& u_perp) {
  const std::size_t d = u1_tilde.dim();
  if (d < 2 || !is_power_of_two(d)) throw MalformedInputError("bad register dimension");
  if (u2_tilde.dim() != d || v1_tilde.dim() != d || v2_tilde.dim() != d || u_perp.dim() != d)
    throw MalformedInputError("register-operator dimension mismatch");
  if (w.dim() != 2 * d) throw MalformedInputError("W must act on ancilla (x) register");
  if (d_c.rows() != 2 || !d_c.square() || o_c.rows() != 2 || !o_c.square())
    throw MalformedInputError("ancilla pieces must be 2x2");

  if (std::abs(d_c(0, 1)) > kDerivedTol || std::abs(d_c(1, 0)) > kDerivedTol ||
      std::abs(std::abs(d_c(0, 0)) - 1.0) > kDerivedTol ||
      std::abs(std::abs(d_c(1, 1)) - 1.0) > kDerivedTol)
    throw MalformedInputError("D_c must be diagonal with unit-modulus entries");
  if (std::abs(o_c(0, 0)) > kDerivedTol || std::abs(o_c(1, 1)) > kDerivedTol ||
      std::abs(std::abs(o_c(0, 1)) - 1.0) > kDerivedTol ||
      std::abs(std::abs(o_c(1, 0)) - 1.0) > kDerivedTol)
    throw MalformedInputError("O_c must be antidiagonal with unit-modulus entries");

  const std::size_t n = log2_exact(d);
  const CMatrix pi0 = subspaces::pi_k_projector(1, n).projector();
  const CMatrix pi1 = CMatrix::identity(d) - pi0;
  check_perp(u_perp.entries(), pi0, d);

  const CMatrix id2 = CMatrix::identity(2);
  const CMatrix c_out = kron(id2, u1_tilde.entries()) * w.entries() *
                        (kron(d_c, pi0) + kron(o_c, pi1)) * kron(id2, u2_tilde.entries());
  const CMatrix controlled =
      kron(ket_proj_2x2(1), CMatrix::identity(d)) + kron(ket_proj_2x2(0), u_perp.entries());
  const CMatrix c_in = kron(id2, v1_tilde.entries()) * controlled * w.entries().adjoint() *
                       kron(id2, v2_tilde.entries());

  return GeneralizedGatePair{UnitaryOp(c_in), UnitaryOp(c_out), d_c,       o_c,      w,
                             u1_tilde,        u2_tilde,         v1_tilde,  v2_tilde, u_perp};
}

namespace {

DensityMatrix traced_step(const DensityMatrix& rho, const CMatrix& mid, const UnitaryOp& u_psi) {
  if (u_psi.dim() != rho.dim()) throw MalformedInputError("u_psi dimension mismatch");
  const CMatrix big_u = kron(CMatrix::identity(2), u_psi.entries());
  const CMatrix total = big_u * mid * big_u.adjoint();

  // ancilla starts in |1>: only the lower-right block of the input is populated
  CMatrix in(2 * rho.dim(), 2 * rho.dim());
  in.set_block(rho.dim(), rho.dim(), rho.entries());
  const CMatrix out = total * in * total.adjoint();
  CMatrix reduced = qmath::partial_trace_ancilla_raw(out);
  resymmetrize(reduced);
  return DensityMatrix(std::move(reduced));
}

}  // namespace

DensityMatrix coherent_step(const DensityMatrix& rho, const UnitaryOp& u_psi) {
  const CnotPair cnots = canonical_cnots(rho.num_qubits());
  return traced_step(rho, cnots.c_in.entries() * cnots.c_out.entries(), u_psi);
}

DensityMatrix coherent_step(const DensityMatrix& rho, const UnitaryOp& u_psi,
                            const GeneralizedGatePair& gates) {
  if (gates.u1_tilde.dim() != rho.dim())
    throw MalformedInputError("gate pair register dimension mismatch");
  const CMatrix id2 = CMatrix::identity(2);
  // compensation sandwich from the flexibility analysis: undo the dressing
  // unitaries around each entangling gate
  const CMatrix comp_in = kron(id2, gates.v1_tilde.entries().adjoint()) *
                          gates.c_in_tilde.entries() *
                          kron(id2, gates.v2_tilde.entries().adjoint());
  const CMatrix comp_out = kron(id2, gates.u1_tilde.entries().adjoint()) *
                           gates.c_out_tilde.entries() *
                           kron(id2, gates.u2_tilde.entries().adjoint());
  return traced_step(rho, comp_in * comp_out, u_psi);
}

UTotResult u_tot(const UnitaryOp& u_psi, const UnitaryOp& c_in, const UnitaryOp& c_out) {
  const std::size_t d = u_psi.dim();
  if (c_in.dim() != 2 * d || c_out.dim() != 2 * d)
    throw MalformedInputError("controlled gates must act on ancilla (x) register");

  const CMatrix big_u = kron(CMatrix::identity(2), u_psi.entries());
  const CMatrix total = big_u * c_in.entries() * c_out.entries() * big_u.adjoint();

  const CMatrix b00 = total.block(0, 0, d, d);
  const CMatrix b01 = total.block(0, d, d, d);
  const CMatrix b10 = total.block(d, 0, d, d);
  const CMatrix b11 = total.block(d, d, d, d);

  // expected form: (|1><1| (x) I + |0><0| (x) U_perp)(I (x) Pi_S + X (x) Pi_S^perp)
  // so b11 = Pi_S, b10 = Pi_S^perp, b00 = U_perp Pi_S, b01 = U_perp Pi_S^perp.
  const std::size_t n = log2_exact(d);
  const CMatrix pi1_proj = subspaces::pi_k_projector(1, n).projector();
  const CMatrix proj_s = u_psi.entries() * pi1_proj * u_psi.entries().adjoint();
  const CMatrix comp_s = CMatrix::identity(d) - proj_s;

  const CMatrix induced = b00 + b01;  // U_perp (Pi_S + Pi_S^perp)
  double dev = std::max(max_abs_diff(b11, proj_s), max_abs_diff(b10, comp_s));
  dev = std::max(dev, max_abs_diff(b00, induced * proj_s));
  dev = std::max(dev, max_abs_diff(b01, induced * comp_s));
  const CMatrix rebuilt = induced * comp_s * induced.adjoint();
  dev = std::max(dev, max_abs_diff(rebuilt, proj_s));
  if (dev > kDerivedTol)
    throw InconsistencyError("U_tot does not match the controlled block form (deviation " +
                             std::to_string(dev) + ")");

  return UTotResult{UnitaryOp(total), UnitaryOp(induced)};
}

std::vector<bool> compensation_needed(const UnitaryOp& v1_tilde,
                                      const std::vector<Subspace>& parts) {
  std::vector<bool> out;
  out.reserve(parts.size());
  const CMatrix& v = v1_tilde.entries();
  for (const Subspace& s : parts) {
    if (s.ambient_dim() != v1_tilde.dim())
      throw MalformedInputError("subspace dimension mismatch in compensation check");
    const CMatrix& p = s.projector();
    const bool commutes = max_abs_diff(v * p, p * v) <= kDerivedTol;

    // identity action up to one global phase per subspace
    const cplx lambda = (v * p).trace() / static_cast<double>(s.dim());
    bool identity_action = false;
    if (std::abs(lambda) > 0.5) {
      const cplx phase = lambda / std::abs(lambda);
      identity_action = max_abs_diff(v * p, phase * p) <= kDerivedTol;
    }
    out.push_back(commutes && identity_action);
  }
  return out;
}

}  // namespace splitpump::channels
