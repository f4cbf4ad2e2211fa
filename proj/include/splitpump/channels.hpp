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

#ifndef SPLITPUMP_CHANNELS_HPP_
#define SPLITPUMP_CHANNELS_HPP_

#include <cstdint>
#include <vector>

#include "splitpump/qmath.hpp"
#include "splitpump/subspaces.hpp"

// The subspace-pumping channel realized three ways: as a Kraus map, as a
// sampled measurement-plus-feedback step, and as a coherent circuit on an
// ancilla qubit tensored to the left of the register.

namespace splitpump::channels {

class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMatrix> operators);

  const std::vector<CMatrix>& operators() const { return operators_; }
  std::size_t dim() const { return operators_.front().rows(); }

  qmath::DensityMatrix apply(const qmath::DensityMatrix& rho) const;
  CMatrix apply_raw(const CMatrix& rho) const;

 private:
  std::vector<CMatrix> operators_;
};

struct MeasurementRecord {
  std::size_t outcome_index;  // 0: projected into S, 1: complement (fed back)
  double probability;         // Born probability of the sampled outcome
  qmath::DensityMatrix posterior;
};

// The two controlled-not resources on ancilla (x) register: c_out copies the
// first register qubit onto the ancilla, c_in flips the first register qubit
// when the ancilla is |0>.
struct CnotPair {
  qmath::UnitaryOp c_in;
  qmath::UnitaryOp c_out;
};
CnotPair canonical_cnots(std::size_t num_register_qubits);

// Involution exchanging a half-dimensional subspace with its complement,
// frame vector i of S^perp <-> frame vector pairing[i] of S. Satisfies
// U_perp Pi_S^perp U_perp† = Pi_S.
qmath::UnitaryOp u_perp(const subspaces::Subspace& s);
qmath::UnitaryOp u_perp(const subspaces::Subspace& s, const std::vector<std::size_t>& pairing);

// Kraus operators { Pi_S, U_perp Pi_S^perp }.
KrausChannel pumping_channel(const subspaces::Subspace& s, const qmath::UnitaryOp& u_perp);

// One sampled run of the classical feedback loop: measure {Pi_S, Pi_S^perp},
// do nothing on the first outcome, apply u_perp on the second.
MeasurementRecord measurement_feedback_step(const qmath::DensityMatrix& rho,
                                            const subspaces::Subspace& s,
                                            const qmath::UnitaryOp& u_perp, std::uint64_t seed);

// Entangling-gate pair of the admissible general form, kept with its pieces
// so the compensated control step can undo the inner and outer dressings.
struct GeneralizedGatePair {
  qmath::UnitaryOp c_in_tilde;
  qmath::UnitaryOp c_out_tilde;
  CMatrix d_c;  // diagonal ancilla phases
  CMatrix o_c;  // antidiagonal ancilla phases
  qmath::UnitaryOp w;
  qmath::UnitaryOp u1_tilde, u2_tilde, v1_tilde, v2_tilde;
  qmath::UnitaryOp u_perp;  // relative to range(Pi^(1))
};

GeneralizedGatePair build_generalized(const CMatrix& d_c, const CMatrix& o_c,
                                      const qmath::UnitaryOp& w, const qmath::UnitaryOp& u1_tilde,
                                      const qmath::UnitaryOp& u2_tilde,
                                      const qmath::UnitaryOp& v1_tilde,
                                      const qmath::UnitaryOp& v2_tilde,
                                      const qmath::UnitaryOp& u_perp);

// One coherent control step with the ancilla prepared in |1>, either with the
// canonical controlled-nots or with a compensated generalized pair; returns
// the register state after discarding the ancilla.
qmath::DensityMatrix coherent_step(const qmath::DensityMatrix& rho, const qmath::UnitaryOp& u_psi);
qmath::DensityMatrix coherent_step(const qmath::DensityMatrix& rho, const qmath::UnitaryOp& u_psi,
                                   const GeneralizedGatePair& gates);

struct UTotResult {
  qmath::UnitaryOp u_tot;
  qmath::UnitaryOp induced_u_perp;
};

// U_tot = (I (x) U_psi) C_in C_out (I (x) U_psi†); verifies the two-block
// controlled form and reports the induced U_perp.
UTotResult u_tot(const qmath::UnitaryOp& u_psi, const qmath::UnitaryOp& c_in,
                 const qmath::UnitaryOp& c_out);

// Per subspace k: true when v1_tilde commutes with the projector AND acts on
// the subspace as the identity up to one global phase, i.e. no compensation
// is required for it in the control step.
std::vector<bool> compensation_needed(const qmath::UnitaryOp& v1_tilde,
                                      const std::vector<subspaces::Subspace>& subspaces);

}  // namespace splitpump::channels

#endif  // SPLITPUMP_CHANNELS_HPP_
