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

#ifndef SPLITPUMP_PROTOCOL_HPP_
#define SPLITPUMP_PROTOCOL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "splitpump/channels.hpp"
#include "splitpump/qmath.hpp"
#include "splitpump/subspaces.hpp"

// Full state preparation: N pumping steps over a splitting decomposition,
// the one-step dead-beat protocol, and a perturbation study for gate errors.

namespace splitpump::protocol {

enum class Mode { kKraus, kCoherent, kTrajectory };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

struct StepRecord {
  std::size_t index;  // 1-based control step
  qmath::DensityMatrix state;
  double fidelity;
  // dim of the intersection of the first j subspaces, j = 1..index
  std::vector<std::size_t> support_dims;
  // containment in each individual S_k, k = 1..index, at 1e-9
  std::vector<bool> subspace_support_ok;
  // containment in the accumulated intersection at 1e-9
  bool support_ok;
};

struct ProtocolTrace {
  qmath::Ket target;
  Mode mode;
  std::uint64_t seed;
  std::vector<StepRecord> steps;

  double final_fidelity() const;
};

// Exactly N control steps over the canonical nested ordering; in kraus and
// coherent modes the final state is the target for any initial state, in
// trajectory mode one stochastic branch history is sampled.
ProtocolTrace stabilize(const qmath::Ket& target, const qmath::DensityMatrix& rho0, Mode mode,
                        std::uint64_t seed);
ProtocolTrace stabilize(const subspaces::SplittingDecomposition& decomp,
                        const qmath::DensityMatrix& rho0, Mode mode, std::uint64_t seed);

struct DeadBeatResult {
  channels::MeasurementRecord record;
  qmath::DensityMatrix final_state;
};

// Non-degenerate projective measurement in the given basis followed by the
// unitary steering the observed basis state onto the target; reaches the
// target in one cycle on every branch.
DeadBeatResult dead_beat_prepare(const qmath::Ket& target, const qmath::DensityMatrix& rho0,
                                 const std::vector<qmath::Ket>& basis, std::uint64_t seed);

// stabilize with each step's basis unitary right-multiplied by
// exp(-i epsilon H), H a fresh random Hermitian of unit spectral norm.
ProtocolTrace perturbed_stabilize(const qmath::Ket& target, const qmath::DensityMatrix& rho0,
                                  double epsilon, std::uint64_t seed);

}  // namespace splitpump::protocol

#endif  // SPLITPUMP_PROTOCOL_HPP_
