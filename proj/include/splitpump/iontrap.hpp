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

#ifndef SPLITPUMP_IONTRAP_HPP_
#define SPLITPUMP_IONTRAP_HPP_

#include <cstdint>

#include "splitpump/protocol.hpp"
#include "splitpump/qmath.hpp"

// Trapped-ion case study: Molmer-Sorensen gates, their split into a
// conditional gate plus a harmless residual, Bell-state pumping in the full
// and single-MS-per-cycle variants, and GHZ stabilizer pumping.

namespace splitpump::iontrap {

struct MsGateSpec {
  double theta;
  double phi;
  std::size_t num_qubits;  // ions in the gate, ancilla included
};

// exp(-i (theta/4) (cos(phi) S_x + sin(phi) S_y)^2) with collective spins
// summed over all ions in the gate.
qmath::UnitaryOp ms_gate(const MsGateSpec& spec);

struct MsDecomposition {
  qmath::UnitaryOp u_prime;       // ancilla-identity (x) residual, 8x8
  qmath::UnitaryOp c_out;         // conditional gate onto the ancilla, 8x8
  CMatrix u_residual;             // the 4x4 system-side residual block
  CMatrix sector_plus;            // +1 eigenprojector of the stabilizer, 4x4
  CMatrix sector_minus;           // -1 eigenprojector, 4x4
};

// U_{X^2}(pi/2) = U'_X (I (x) Pi_-1 + X (x) Pi_+1) for the X1X2 sectors.
MsDecomposition decompose_ms_x();
// U_{Y^2}(pi/2) = U'_Y (Z (x) Pi'_-1 + X (x) Pi'_+1) for the Y1Y2 sectors.
MsDecomposition decompose_ms_y();

// Composite pulse used experimentally for the controlled gate: a collective
// Y rotation sandwich around a two-ion X(x)X interaction plus a Z_1 phase.
// At alpha = pi/2 it acts as the ideal ancilla-conditioned Z_1 up to
// ancilla-conditional phases; the sector-transfer probability is sin^2(alpha).
qmath::UnitaryOp experimental_cin(double alpha);

// Two pumping cycles (X1X2 then Y1Y2) driving any two-qubit state into
// |Psi->. The full variant repeats the MS gate after the controlled gate,
// the simplified one applies a single MS gate per cycle. kTrajectory mode
// measures the ancilla instead of tracing it out; kKraus is the same reduced
// map as kCoherent, computed the same way.
protocol::ProtocolTrace bell_pump(const qmath::DensityMatrix& rho0, bool simplified,
                                  std::uint64_t seed,
                                  protocol::Mode mode = protocol::Mode::kCoherent);

// n steps of stabilizer pumping onto the n-qubit GHZ state, n in {3, 4}.
protocol::ProtocolTrace ghz_pump(std::size_t n, const qmath::DensityMatrix& rho0,
                                 std::uint64_t seed,
                                 protocol::Mode mode = protocol::Mode::kKraus);

}  // namespace splitpump::iontrap

#endif  // SPLITPUMP_IONTRAP_HPP_
