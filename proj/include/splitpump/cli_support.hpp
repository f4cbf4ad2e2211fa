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

#ifndef SPLITPUMP_CLI_SUPPORT_HPP_
#define SPLITPUMP_CLI_SUPPORT_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splitpump/protocol.hpp"
#include "splitpump/qmath.hpp"

// Front-end plumbing shared by the command-line tool and its tests: target
// and initial-state specifications, the JSON trace format, and the checks
// behind the verify-ms report.

namespace splitpump::cli {

// "bell:phi+", "bell:phi-", "bell:psi+", "bell:psi-", "ghz:<n>", "zero:<n>",
// or "file:<path>" pointing at an amplitude list.
struct TargetSpec {
  std::string text;
  qmath::Ket ket;
};
TargetSpec parse_target(const std::string& text);

// "mixed", "random:<seed>", or "file:<path>" with a density-matrix document.
qmath::DensityMatrix make_rho0(const std::string& source, std::size_t num_qubits);

struct RunConfig {
  protocol::Mode mode = protocol::Mode::kKraus;
  std::uint64_t seed = 0;
  int trials = 1;
  double epsilon = 0.0;
  std::string out_path = "-";  // "-" writes to stdout
};

struct TraceStep {
  std::size_t index = 0;
  double fidelity = 0.0;
  std::vector<std::size_t> support_dims;
  bool support_ok = false;
};

// One run's machine-readable record; doubles are serialized with 17
// significant digits so a round trip is bit-exact.
struct TraceDoc {
  std::string target;
  std::string mode;
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
  double final_fidelity = 0.0;
  std::optional<double> epsilon;
  std::optional<int> trials;
  std::optional<double> mean_final_fidelity;
  std::optional<double> min_final_fidelity;
};

TraceDoc make_trace_doc(const protocol::ProtocolTrace& trace, const std::string& target_text);

void write_trace(std::ostream& out, const TraceDoc& doc);
TraceDoc read_trace(std::istream& in);

void write_density(std::ostream& out, const qmath::DensityMatrix& rho);
qmath::DensityMatrix read_density(std::istream& in);

// Structural checks for both MS-gate decompositions plus the composite
// controlled-gate pulse, with the residuals the report prints.
struct VerifyMsReport {
  double x_unitarity_residual = 0.0;
  double y_unitarity_residual = 0.0;
  double x_product_residual = 0.0;
  double y_product_residual = 0.0;
  double x_commutation_residual = 0.0;
  double y_commutation_residual = 0.0;
  double cin_channel_residual = 0.0;

  struct BellAction {
    std::string input;
    std::string output;
    cplx scalar;
  };
  std::vector<BellAction> x_actions;
  std::vector<BellAction> y_actions;

  bool pass() const;
};

VerifyMsReport run_verify_ms();
void print_verify_ms(std::ostream& out, const VerifyMsReport& report);

}  // namespace splitpump::cli

#endif  // SPLITPUMP_CLI_SUPPORT_HPP_
