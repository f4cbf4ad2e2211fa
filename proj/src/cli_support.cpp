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

#include "splitpump/cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "splitpump/iontrap.hpp"

namespace splitpump::cli {

using nlohmann::json;
using qmath::DensityMatrix;
using qmath::Ket;

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MalformedInputError("cannot parse " + what + " from '" + s + "'");
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw MalformedInputError("'" + path + "' is not valid JSON");
  return j;
}

std::vector<cplx> parse_pairs(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw MalformedInputError(what + " must be an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw MalformedInputError(what + " entries must be [re, im] number pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

}  // namespace

TargetSpec parse_target(const std::string& text) {
  if (text == "bell:phi+") return {text, qmath::bell_phi_plus()};
  if (text == "bell:phi-") return {text, qmath::bell_phi_minus()};
  if (text == "bell:psi+") return {text, qmath::bell_psi_plus()};
  if (text == "bell:psi-") return {text, qmath::bell_psi_minus()};
  if (text.starts_with("ghz:")) {
    const std::uint64_t n = parse_u64(text.substr(4), "GHZ qubit count");
    if (n < 1 || n > 16) throw MalformedInputError("ghz:<n> wants 1 <= n <= 16");
    return {text, qmath::ghz_state(n)};
  }
  if (text.starts_with("zero:")) {
    const std::uint64_t n = parse_u64(text.substr(5), "qubit count");
    if (n < 1 || n > 16) throw MalformedInputError("zero:<n> wants 1 <= n <= 16");
    return {text, qmath::zero_state(n)};
  }
  if (text.starts_with("file:")) {
    const json j = load_json_file(text.substr(5));
    if (!j.contains("amplitudes"))
      throw MalformedInputError("amplitude file needs an 'amplitudes' field");
    std::vector<cplx> amps = parse_pairs(j["amplitudes"], "amplitudes");
    if (amps.size() < 2 || !is_power_of_two(amps.size()))
      throw MalformedInputError("amplitude list length must be 2^N with N >= 1");
    const double n = norm(amps);
    if (std::abs(n - 1.0) > 1e-6)
      throw MalformedInputError("amplitude list is not normalized (|norm - 1| = " +
                                std::to_string(std::abs(n - 1.0)) + " > 1e-6)");
    for (auto& a : amps) a /= n;
    return {text, Ket(std::move(amps))};
  }
  throw MalformedInputError("unknown target '" + text +
                            "' (expected bell:*, ghz:<n>, zero:<n>, or file:<path>)");
}

DensityMatrix make_rho0(const std::string& source, std::size_t num_qubits) {
  if (source == "mixed") return DensityMatrix::maximally_mixed(num_qubits);
  if (source.starts_with("random:")) {
    const std::uint64_t s = parse_u64(source.substr(7), "rho0 seed");
    return qmath::random_density(num_qubits, s);
  }
  if (source.starts_with("file:")) {
    std::ifstream in(source.substr(5));
    if (!in) throw MalformedInputError("cannot open '" + source.substr(5) + "'");
    DensityMatrix rho = read_density(in);
    if (rho.num_qubits() != num_qubits)
      throw MalformedInputError("initial state has " + std::to_string(rho.num_qubits()) +
                                " qubits, target has " + std::to_string(num_qubits));
    return rho;
  }
  throw MalformedInputError("unknown rho0 source '" + source +
                            "' (expected mixed, random:<seed>, or file:<path>)");
}

TraceDoc make_trace_doc(const protocol::ProtocolTrace& trace, const std::string& target_text) {
  TraceDoc doc;
  doc.target = target_text;
  doc.mode = protocol::to_string(trace.mode);
  doc.seed = trace.seed;
  for (const auto& step : trace.steps)
    doc.steps.push_back(TraceStep{step.index, step.fidelity, step.support_dims, step.support_ok});
  doc.final_fidelity = trace.final_fidelity();
  return doc;
}

void write_trace(std::ostream& out, const TraceDoc& doc) {
  out << "{\n";
  out << "  \"target\": \"" << json_escape(doc.target) << "\",\n";
  out << "  \"mode\": \"" << json_escape(doc.mode) << "\",\n";
  out << "  \"seed\": " << doc.seed << ",\n";
  if (doc.epsilon) out << "  \"epsilon\": " << fmt17(*doc.epsilon) << ",\n";
  if (doc.trials) out << "  \"trials\": " << *doc.trials << ",\n";
  out << "  \"steps\": [";
  for (std::size_t i = 0; i < doc.steps.size(); ++i) {
    const TraceStep& s = doc.steps[i];
    out << (i ? ",\n    " : "\n    ");
    out << "{\"index\": " << s.index << ", \"fidelity\": " << fmt17(s.fidelity)
        << ", \"support_dims\": [";
    for (std::size_t j = 0; j < s.support_dims.size(); ++j)
      out << (j ? ", " : "") << s.support_dims[j];
    out << "], \"support_ok\": " << (s.support_ok ? "true" : "false") << "}";
  }
  out << "\n  ],\n";
  out << "  \"final_fidelity\": " << fmt17(doc.final_fidelity);
  if (doc.mean_final_fidelity)
    out << ",\n  \"mean_final_fidelity\": " << fmt17(*doc.mean_final_fidelity);
  if (doc.min_final_fidelity)
    out << ",\n  \"min_final_fidelity\": " << fmt17(*doc.min_final_fidelity);
  out << "\n}\n";
}

TraceDoc read_trace(std::istream& in) {
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw MalformedInputError("trace document is not valid JSON");
  TraceDoc doc;
  try {
    doc.target = j.at("target").get<std::string>();
    doc.mode = j.at("mode").get<std::string>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& s : j.at("steps")) {
      TraceStep step;
      step.index = s.at("index").get<std::size_t>();
      step.fidelity = s.at("fidelity").get<double>();
      for (const auto& d : s.at("support_dims")) step.support_dims.push_back(d.get<std::size_t>());
      step.support_ok = s.at("support_ok").get<bool>();
      doc.steps.push_back(std::move(step));
    }
    doc.final_fidelity = j.at("final_fidelity").get<double>();
    if (j.contains("epsilon")) doc.epsilon = j["epsilon"].get<double>();
    if (j.contains("trials")) doc.trials = j["trials"].get<int>();
    if (j.contains("mean_final_fidelity"))
      doc.mean_final_fidelity = j["mean_final_fidelity"].get<double>();
    if (j.contains("min_final_fidelity"))
      doc.min_final_fidelity = j["min_final_fidelity"].get<double>();
  } catch (const json::exception& e) {
    throw MalformedInputError(std::string("bad trace document: ") + e.what());
  }
  return doc;
}

void write_density(std::ostream& out, const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  out << "{\n  \"dim\": " << d << ",\n  \"entries\": [";
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const cplx& z = rho.entries()(r, c);
      out << ((r + c) ? ",\n    " : "\n    ");
      out << "[" << fmt17(z.real()) << ", " << fmt17(z.imag()) << "]";
    }
  out << "\n  ]\n}\n";
}

DensityMatrix read_density(std::istream& in) {
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw MalformedInputError("density document is not valid JSON");
  if (!j.contains("dim") || !j.contains("entries"))
    throw MalformedInputError("density document needs 'dim' and 'entries'");
  const std::size_t d = j["dim"].get<std::size_t>();
  const std::vector<cplx> entries = parse_pairs(j["entries"], "entries");
  if (entries.size() != d * d)
    throw MalformedInputError("density document has " + std::to_string(entries.size()) +
                              " entries, expected dim^2 = " + std::to_string(d * d));
  CMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = entries[r * d + c];
  return DensityMatrix(std::move(m));  // validates Hermiticity, trace, positivity
}

// ---------------------------------------------------------------------------
// verify-ms
// ---------------------------------------------------------------------------

namespace {

struct NamedBell {
  const char* name;
  Ket ket;
};

std::vector<NamedBell> bell_basis() {
  return {{"phi+", qmath::bell_phi_plus()},
          {"psi+", qmath::bell_psi_plus()},
          {"phi-", qmath::bell_phi_minus()},
          {"psi-", qmath::bell_psi_minus()}};
}

std::vector<VerifyMsReport::BellAction> bell_actions(const CMatrix& residual) {
  std::vector<VerifyMsReport::BellAction> actions;
  for (const auto& in : bell_basis()) {
    const std::vector<cplx> out_vec = residual.apply(in.ket.amplitudes());
    for (const auto& out : bell_basis()) {
      const cplx overlap = inner(out.ket.amplitudes(), out_vec);
      if (std::abs(overlap) > 0.9) {
        actions.push_back({in.name, out.name, overlap});
        break;
      }
    }
  }
  return actions;
}

double commutation_residual(const CMatrix& u_prime, const CMatrix& sector) {
  const CMatrix big = kron(CMatrix::identity(2), sector);
  return max_abs_diff(u_prime * big, big * u_prime);
}

// Reduced map of one simplified X-cycle, probed on all matrix units.
double cin_channel_residual() {
  const qmath::UnitaryOp ms = iontrap::ms_gate({std::numbers::pi / 2.0, 0.0, 3});
  CMatrix ideal(8, 8);
  ideal.set_block(0, 0, kron(qmath::pauli_matrix(qmath::Pauli::Z), CMatrix::identity(2)));
  ideal.set_block(4, 4, CMatrix::identity(4));
  const CMatrix experimental = iontrap::experimental_cin(std::numbers::pi / 2.0).entries();

  const CMatrix seq_ideal = ideal * ms.entries();
  const CMatrix seq_exp = experimental * ms.entries();
  double dev = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CMatrix unit8(8, 8);
      unit8(4 + i, 4 + j) = 1.0;  // ancilla |1><1| (x) E_ij
      const CMatrix a =
          qmath::partial_trace_ancilla_raw(seq_ideal * unit8 * seq_ideal.adjoint());
      const CMatrix b = qmath::partial_trace_ancilla_raw(seq_exp * unit8 * seq_exp.adjoint());
      dev = std::max(dev, max_abs_diff(a, b));
    }
  return dev;
}

}  // namespace

bool VerifyMsReport::pass() const {
  const bool structural =
      x_unitarity_residual <= kDerivedTol && y_unitarity_residual <= kDerivedTol &&
      x_product_residual <= kDerivedTol && y_product_residual <= kDerivedTol &&
      x_commutation_residual <= kDerivedTol && y_commutation_residual <= kDerivedTol;
  if (!structural) return false;
  for (const auto* actions : {&x_actions, &y_actions}) {
    if (actions->size() != 4) return false;
    for (const auto& a : *actions)
      if (std::abs(std::abs(a.scalar) - 1.0) > kDerivedTol) return false;
  }
  return cin_channel_residual <= kSupportTol;
}

VerifyMsReport run_verify_ms() {
  VerifyMsReport rep;
  const iontrap::MsDecomposition dx = iontrap::decompose_ms_x();
  const iontrap::MsDecomposition dy = iontrap::decompose_ms_y();

  rep.x_unitarity_residual =
      max_abs_diff(dx.u_residual * dx.u_residual.adjoint(), CMatrix::identity(4));
  rep.y_unitarity_residual =
      max_abs_diff(dy.u_residual * dy.u_residual.adjoint(), CMatrix::identity(4));

  const qmath::UnitaryOp ms_x = iontrap::ms_gate({std::numbers::pi / 2.0, 0.0, 3});
  const qmath::UnitaryOp ms_y =
      iontrap::ms_gate({std::numbers::pi / 2.0, std::numbers::pi / 2.0, 3});
  rep.x_product_residual =
      max_abs_diff(dx.u_prime.entries() * dx.c_out.entries(), ms_x.entries());
  rep.y_product_residual =
      max_abs_diff(dy.u_prime.entries() * dy.c_out.entries(), ms_y.entries());

  rep.x_commutation_residual = std::max(commutation_residual(dx.u_prime.entries(), dx.sector_plus),
                                        commutation_residual(dx.u_prime.entries(), dx.sector_minus));
  rep.y_commutation_residual = std::max(commutation_residual(dy.u_prime.entries(), dy.sector_plus),
                                        commutation_residual(dy.u_prime.entries(), dy.sector_minus));

  rep.x_actions = bell_actions(dx.u_residual);
  rep.y_actions = bell_actions(dy.u_residual);
  rep.cin_channel_residual = cin_channel_residual();
  return rep;
}

void print_verify_ms(std::ostream& out, const VerifyMsReport& rep) {
  out << "MS decomposition checks (all residuals are max-abs deviations)\n";
  out << "  U''_X unitarity residual:      " << fmt17(rep.x_unitarity_residual) << "\n";
  out << "  U''_Y unitarity residual:      " << fmt17(rep.y_unitarity_residual) << "\n";
  out << "  U'_X * C^X_out vs MS(pi/2,0):  " << fmt17(rep.x_product_residual) << "\n";
  out << "  U'_Y * C^Y_out vs MS(pi/2,y):  " << fmt17(rep.y_product_residual) << "\n";
  out << "  [U'_X, sector projectors]:     " << fmt17(rep.x_commutation_residual) << "\n";
  out << "  [U'_Y, sector projectors]:     " << fmt17(rep.y_commutation_residual) << "\n";
  out << "  composite C_in channel dev:    " << fmt17(rep.cin_channel_residual) << "\n";
  out << "Bell-state actions of the residuals (computed scalars)\n";
  auto print_actions = [&](const char* tag, const std::vector<VerifyMsReport::BellAction>& as) {
    for (const auto& a : as)
      out << "  " << tag << " |" << a.input << ">  ->  (" << fmt17(a.scalar.real()) << " + "
          << fmt17(a.scalar.imag()) << "i) |" << a.output << ">   |s| = "
          << fmt17(std::abs(a.scalar)) << "\n";
  };
  print_actions("U''_X", rep.x_actions);
  print_actions("U''_Y", rep.y_actions);
  out << "note: all scalars have unit modulus; quoting them with an extra 1/sqrt(2)\n"
         "prefactor would contradict unitarity of the residual blocks.\n";
  out << (rep.pass() ? "verify-ms: PASS\n" : "verify-ms: FAIL\n");
}

}  // namespace splitpump::cli
