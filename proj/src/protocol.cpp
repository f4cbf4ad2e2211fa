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

#include "splitpump/protocol.hpp"

#include <cmath>
#include <utility>

namespace splitpump::protocol {

using channels::MeasurementRecord;
using qmath::DensityMatrix;
using qmath::Ket;
using qmath::UnitaryOp;
using subspaces::SplittingDecomposition;
using subspaces::Subspace;

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kKraus: return "kraus";
    case Mode::kCoherent: return "coherent";
    case Mode::kTrajectory: return "trajectory";
  }
  return "kraus";
}

Mode mode_from_string(const std::string& text) {
  if (text == "kraus") return Mode::kKraus;
  if (text == "coherent") return Mode::kCoherent;
  if (text == "trajectory") return Mode::kTrajectory;
  throw MalformedInputError("unknown mode '" + text + "'");
}

double ProtocolTrace::final_fidelity() const {
  return steps.empty() ? 0.0 : steps.back().fidelity;
}

namespace {

double trace_product_real(const CMatrix& a, const CMatrix& b) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s += (a(r, c) * b(c, r)).real();
  return s;
}

// First-qubit bit flip conjugated into the step basis; this is the U_perp the
// canonical controlled-nots induce, so the Kraus and coherent paths agree
// entry by entry.
UnitaryOp induced_u_perp(const UnitaryOp& u_step) {
  const std::size_t d = u_step.dim();
  const CMatrix x1 = kron(qmath::pauli_matrix(qmath::Pauli::X), CMatrix::identity(d / 2));
  return UnitaryOp(u_step.entries() * x1 * u_step.entries().adjoint());
}

Subspace step_subspace(const UnitaryOp& u_step) {
  const std::size_t d = u_step.dim();
  std::vector<Ket> frame;
  frame.reserve(d / 2);
  for (std::size_t j = 0; j < d / 2; ++j) frame.emplace_back(u_step.entries().column(j));
  return Subspace(std::move(frame), d);
}

StepRecord make_record(std::size_t ell, DensityMatrix state, const Ket& target,
                       const SplittingDecomposition& decomp) {
  StepRecord rec{ell, std::move(state), 0.0, {}, {}, false};
  rec.fidelity = qmath::fidelity(rec.state, target);
  for (std::size_t j = 1; j <= ell; ++j)
    rec.support_dims.push_back(std::size_t{1} << (decomp.num_qubits() - j));
  for (std::size_t k = 0; k < ell; ++k) {
    const double w = trace_product_real(decomp.subspaces[k].projector(), rec.state.entries());
    rec.subspace_support_ok.push_back(w >= 1.0 - kSupportTol);
  }
  const double w_all =
      trace_product_real(decomp.nested_intersection_projector(ell), rec.state.entries());
  rec.support_ok = w_all >= 1.0 - kSupportTol;
  return rec;
}

ProtocolTrace run_steps(const SplittingDecomposition& decomp, const DensityMatrix& rho0, Mode mode,
                        std::uint64_t seed, double epsilon) {
  if (rho0.dim() != decomp.target.dim())
    throw MalformedInputError("initial state dimension does not match the target");

  ProtocolTrace trace{decomp.target, mode, seed, {}};
  const std::size_t n = decomp.num_qubits();
  DensityMatrix rho = rho0;
  for (std::size_t ell = 1; ell <= n; ++ell) {
    UnitaryOp u_step = subspaces::step_reordering(decomp, ell);
    if (epsilon > 0.0) {
      const CMatrix h = qmath::random_hermitian_unit_norm(rho.dim(), Rng::mix(seed, 1000 + ell));
      u_step = UnitaryOp(u_step.entries() * qmath::hermitian_exp(h, epsilon, 1.0).entries());
    }

    switch (mode) {
      case Mode::kKraus: {
        const auto channel = channels::pumping_channel(step_subspace(u_step), induced_u_perp(u_step));
        rho = channel.apply(rho);
        break;
      }
      case Mode::kCoherent: {
        rho = channels::coherent_step(rho, u_step);
        break;
      }
      case Mode::kTrajectory: {
        const MeasurementRecord rec = channels::measurement_feedback_step(
            rho, step_subspace(u_step), induced_u_perp(u_step), Rng::mix(seed, ell));
        rho = rec.posterior;
        break;
      }
    }
    trace.steps.push_back(make_record(ell, rho, decomp.target, decomp));
  }
  return trace;
}

}  // namespace

ProtocolTrace stabilize(const Ket& target, const DensityMatrix& rho0, Mode mode,
                        std::uint64_t seed) {
  return run_steps(subspaces::build_splitting(target), rho0, mode, seed, 0.0);
}

ProtocolTrace stabilize(const SplittingDecomposition& decomp, const DensityMatrix& rho0, Mode mode,
                        std::uint64_t seed) {
  return run_steps(decomp, rho0, mode, seed, 0.0);
}

DeadBeatResult dead_beat_prepare(const Ket& target, const DensityMatrix& rho0,
                                 const std::vector<Ket>& basis, std::uint64_t seed) {
  const std::size_t d = target.dim();
  if (rho0.dim() != d) throw MalformedInputError("initial state dimension mismatch");
  if (basis.size() != d)
    throw MalformedInputError("dead-beat needs a complete measurement basis of 2^N kets");
  for (const Ket& k : basis)
    if (k.dim() != d) throw MalformedInputError("basis ket dimension mismatch");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(inner(basis[i].amplitudes(), basis[j].amplitudes())) > kFrameTol)
        throw MalformedInputError("measurement basis is not orthonormal");

  // Born sampling over the non-degenerate projective measurement.
  std::vector<double> probs(d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::vector<cplx> v = rho0.entries().apply(basis[k].amplitudes());
    probs[k] = std::max(0.0, inner(basis[k].amplitudes(), v).real());
  }
  Rng rng(seed);
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t outcome = d - 1;
  for (std::size_t k = 0; k < d; ++k) {
    acc += probs[k];
    if (u < acc) {
      outcome = k;
      break;
    }
  }

  const DensityMatrix posterior = DensityMatrix::pure(basis[outcome]);
  MeasurementRecord record{outcome, probs[outcome], posterior};

  // U_k |phi_k> = |psi>, assembled from two deterministic basis completions.
  const UnitaryOp to_target = qmath::complete_to_unitary({target}, d);
  const UnitaryOp from_outcome = qmath::complete_to_unitary({basis[outcome]}, d);
  const CMatrix u_k = to_target.entries() * from_outcome.entries().adjoint();
  CMatrix final_entries = u_k * posterior.entries() * u_k.adjoint();
  for (std::size_t r = 0; r < d; ++r) {
    final_entries(r, r) = final_entries(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const cplx avg = 0.5 * (final_entries(r, c) + std::conj(final_entries(c, r)));
      final_entries(r, c) = avg;
      final_entries(c, r) = std::conj(avg);
    }
  }
  return DeadBeatResult{std::move(record), DensityMatrix(std::move(final_entries))};
}

ProtocolTrace perturbed_stabilize(const Ket& target, const DensityMatrix& rho0, double epsilon,
                                  std::uint64_t seed) {
  if (epsilon < 0.0) throw MalformedInputError("epsilon must be nonnegative");
  return run_steps(subspaces::build_splitting(target), rho0, Mode::kKraus, seed, epsilon);
}

}  // namespace splitpump::protocol
