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

#include "splitpump/iontrap.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "splitpump/channels.hpp"
#include "splitpump/subspaces.hpp"

namespace splitpump::iontrap {

using protocol::Mode;
using protocol::ProtocolTrace;
using protocol::StepRecord;
using qmath::DensityMatrix;
using qmath::Ket;
using qmath::Pauli;
using qmath::UnitaryOp;

namespace {

CMatrix collective_spin(Pauli p, std::size_t num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  CMatrix s(d, d);
  for (std::size_t k = 1; k <= num_qubits; ++k)
    s += qmath::embed_on_qubit(qmath::pauli_matrix(p), k, num_qubits);
  return s;
}

CMatrix residual_matrix(bool x_variant) {
  // the 4x4 system-side residuals of the pi/2 MS gates
  static const int rows_x[4][4] = {{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}};
  static const int rows_y[4][4] = {{1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {1, -1, -1, 1}};
  const auto& rows = x_variant ? rows_x : rows_y;
  const cplx scale = 0.5 * std::exp(cplx(0.0, -std::numbers::pi / 8.0));
  CMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = scale * static_cast<double>(rows[r][c]);
  return m;
}

MsDecomposition decompose(bool x_variant) {
  const Pauli letter = x_variant ? Pauli::X : Pauli::Y;
  const CMatrix stab = kron(qmath::pauli_matrix(letter), qmath::pauli_matrix(letter));
  CMatrix plus = CMatrix::identity(4) + stab;
  plus *= cplx{0.5};
  CMatrix minus = CMatrix::identity(4) - stab;
  minus *= cplx{0.5};

  const CMatrix x = qmath::pauli_matrix(Pauli::X);
  const CMatrix minus_branch = x_variant ? CMatrix::identity(2) : qmath::pauli_matrix(Pauli::Z);
  const CMatrix c_out = kron(minus_branch, minus) + kron(x, plus);

  const CMatrix residual = residual_matrix(x_variant);
  const CMatrix ancilla_part = x_variant ? CMatrix::identity(2) : qmath::pauli_matrix(Pauli::Z);
  const CMatrix u_prime = kron(ancilla_part, residual);

  const UnitaryOp ms = ms_gate({std::numbers::pi / 2.0, x_variant ? 0.0 : std::numbers::pi / 2.0, 3});
  const double dev = max_abs_diff(u_prime * c_out, ms.entries());
  if (dev > kDerivedTol)
    throw InconsistencyError("MS decomposition does not reproduce the gate (deviation " +
                             std::to_string(dev) + ")");

  return MsDecomposition{UnitaryOp(u_prime), UnitaryOp(c_out), residual, plus, minus};
}

}  // namespace

UnitaryOp ms_gate(const MsGateSpec& spec) {
  if (spec.num_qubits < 2) throw MalformedInputError("an entangling gate needs at least two ions");
  CMatrix axis = collective_spin(Pauli::X, spec.num_qubits);
  axis *= cplx{std::cos(spec.phi)};
  CMatrix sy = collective_spin(Pauli::Y, spec.num_qubits);
  sy *= cplx{std::sin(spec.phi)};
  axis += sy;
  return qmath::hermitian_exp(axis * axis, spec.theta, 0.25);
}

MsDecomposition decompose_ms_x() { return decompose(true); }
MsDecomposition decompose_ms_y() { return decompose(false); }

UnitaryOp experimental_cin(double alpha) {
  constexpr double kPi = std::numbers::pi;
  // collective Y rotation over the two ions the gate addresses (ancilla + 1)
  const CMatrix sy_c1 = qmath::embed_on_qubit(qmath::pauli_matrix(Pauli::Y), 1, 3) +
                        qmath::embed_on_qubit(qmath::pauli_matrix(Pauli::Y), 2, 3);
  const CMatrix xx_c1 = qmath::embed_on_qubit(qmath::pauli_matrix(Pauli::X), 1, 3) *
                        qmath::embed_on_qubit(qmath::pauli_matrix(Pauli::X), 2, 3);
  const CMatrix z1 = qmath::embed_on_qubit(qmath::pauli_matrix(Pauli::Z), 2, 3);

  const UnitaryOp uy_fwd = qmath::hermitian_exp(sy_c1, kPi / 2.0, 0.5);    // exp(-i pi/4 Sy)
  const UnitaryOp uy_bwd = qmath::hermitian_exp(sy_c1, -kPi / 2.0, 0.5);   // exp(+i pi/4 Sy)
  const UnitaryOp ms_part = qmath::hermitian_exp(xx_c1, -alpha, 0.5);      // exp(+i alpha/2 XX)
  // rotation-angle convention, exp(+i alpha/2 Z1); this is what makes the
  // sector-transfer probability come out as sin^2(alpha)
  const UnitaryOp z_part = qmath::hermitian_exp(z1, -alpha, 0.5);

  return UnitaryOp(z_part.entries() * uy_fwd.entries() * ms_part.entries() * uy_bwd.entries());
}

namespace {

StepRecord cycle_record(std::size_t index, DensityMatrix state, const Ket& target,
                        const subspaces::SplittingDecomposition& decomp) {
  StepRecord rec{index, std::move(state), 0.0, {}, {}, false};
  rec.fidelity = qmath::fidelity(rec.state, target);
  for (std::size_t j = 1; j <= index; ++j)
    rec.support_dims.push_back(std::size_t{1} << (decomp.num_qubits() - j));
  for (std::size_t k = 0; k < index; ++k) {
    double w = 0.0;
    const CMatrix& p = decomp.subspaces[k].projector();
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) w += (p(r, c) * rec.state.entries()(c, r)).real();
    rec.subspace_support_ok.push_back(w >= 1.0 - kSupportTol);
  }
  const CMatrix acc = decomp.nested_intersection_projector(index);
  double w_all = 0.0;
  for (std::size_t r = 0; r < acc.rows(); ++r)
    for (std::size_t c = 0; c < acc.cols(); ++c)
      w_all += (acc(r, c) * rec.state.entries()(c, r)).real();
  rec.support_ok = w_all >= 1.0 - kSupportTol;
  return rec;
}

DensityMatrix run_cycle(const DensityMatrix& rho, const UnitaryOp& ms, const CMatrix& c_in,
                        bool simplified, Mode mode, std::uint64_t cycle_seed) {
  CMatrix seq = c_in * ms.entries();
  if (!simplified) seq = ms.entries() * seq;

  CMatrix state8(8, 8);
  state8.set_block(4, 4, rho.entries());  // ancilla reset to |1>
  state8 = seq * state8 * seq.adjoint();

  if (mode == Mode::kTrajectory) {
    // read the ancilla out instead of discarding it coherently
    double p0 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) p0 += state8(i, i).real();
    p0 = std::clamp(p0, 0.0, 1.0);
    Rng rng(cycle_seed);
    const bool got0 = rng.uniform() < p0;
    CMatrix collapsed(8, 8);
    if (got0)
      collapsed.set_block(0, 0, state8.block(0, 0, 4, 4));
    else
      collapsed.set_block(4, 4, state8.block(4, 4, 4, 4));
    collapsed *= cplx{1.0 / (got0 ? p0 : 1.0 - p0)};
    state8 = std::move(collapsed);
  }

  CMatrix reduced = qmath::partial_trace_ancilla_raw(state8);
  for (std::size_t r = 0; r < 4; ++r) {
    reduced(r, r) = reduced(r, r).real();
    for (std::size_t c = r + 1; c < 4; ++c) {
      const cplx avg = 0.5 * (reduced(r, c) + std::conj(reduced(c, r)));
      reduced(r, c) = avg;
      reduced(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix(std::move(reduced));
}

}  // namespace

ProtocolTrace bell_pump(const DensityMatrix& rho0, bool simplified, std::uint64_t seed, Mode mode) {
  if (rho0.num_qubits() != 2) throw MalformedInputError("Bell pumping wants a two-qubit state");

  const auto decomp = subspaces::stabilizer_splitting(
      {qmath::PauliString::parse("-XX"), qmath::PauliString::parse("-YY")});
  const Ket target = qmath::bell_psi_minus();

  const UnitaryOp ms_x = ms_gate({std::numbers::pi / 2.0, 0.0, 3});
  const UnitaryOp ms_y = ms_gate({std::numbers::pi / 2.0, std::numbers::pi / 2.0, 3});
  // C_in = |0><0|_c (x) Z_1 + |1><1|_c (x) I
  CMatrix c_in(8, 8);
  c_in.set_block(0, 0, kron(qmath::pauli_matrix(Pauli::Z), CMatrix::identity(2)));
  c_in.set_block(4, 4, CMatrix::identity(4));

  ProtocolTrace trace{target, mode, seed, {}};
  DensityMatrix rho = rho0;
  rho = run_cycle(rho, ms_x, c_in, simplified, mode, Rng::mix(seed, 1));
  trace.steps.push_back(cycle_record(1, rho, target, decomp));
  rho = run_cycle(rho, ms_y, c_in, simplified, mode, Rng::mix(seed, 2));
  trace.steps.push_back(cycle_record(2, rho, target, decomp));
  return trace;
}

ProtocolTrace ghz_pump(std::size_t n, const DensityMatrix& rho0, std::uint64_t seed, Mode mode) {
  if (n != 3 && n != 4) throw MalformedInputError("GHZ pumping is set up for 3 or 4 qubits");
  if (rho0.num_qubits() != n) throw MalformedInputError("initial state has the wrong qubit count");

  std::vector<qmath::PauliString> generators;
  generators.emplace_back(std::vector<Pauli>(n, Pauli::X), 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Pauli> letters(n, Pauli::I);
    letters[i] = Pauli::Z;
    letters[i + 1] = Pauli::Z;
    generators.emplace_back(std::move(letters), 1);
  }
  return protocol::stabilize(subspaces::stabilizer_splitting(generators), rho0, mode, seed);
}

}  // namespace splitpump::iontrap
