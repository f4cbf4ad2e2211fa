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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitpump/cli_support.hpp"
#include "splitpump/iontrap.hpp"
#include "splitpump/protocol.hpp"

namespace {

using namespace splitpump;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitThreshold = 4;
constexpr double kFidelityGate = 1.0 - 1e-6;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPLITPUMP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw MalformedInputError("SPLITPUMP_SEED is not an unsigned integer");
    }
  }
  return 0;
}

void emit(const cli::TraceDoc& doc, const std::string& out_path) {
  if (out_path == "-" || out_path.empty()) {
    cli::write_trace(std::cout, doc);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw MalformedInputError("cannot open output file '" + out_path + "'");
  cli::write_trace(out, doc);
}

template <typename Fn>
std::vector<protocol::ProtocolTrace> run_trials(int trials, Fn&& fn) {
  std::vector<std::optional<protocol::ProtocolTrace>> slots(trials);
  std::vector<std::string> errors(trials);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    try {
      slots[t] = fn(static_cast<std::uint64_t>(t));
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  }
  for (int t = 0; t < trials; ++t)
    if (!slots[t]) throw NumericalError("trial " + std::to_string(t) + " failed: " + errors[t]);
  std::vector<protocol::ProtocolTrace> out;
  out.reserve(trials);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Trace document for trial 0 plus min/mean aggregates when more trials ran.
cli::TraceDoc aggregate(const std::vector<protocol::ProtocolTrace>& traces,
                        const std::string& target_text, std::uint64_t master_seed) {
  cli::TraceDoc doc = cli::make_trace_doc(traces.front(), target_text);
  doc.seed = master_seed;  // the document echoes the master seed, trials derive from it
  if (traces.size() > 1) {
    doc.trials = static_cast<int>(traces.size());
    double sum = 0.0, mn = 1.0;
    for (const auto& t : traces) {
      sum += t.final_fidelity();
      mn = std::min(mn, t.final_fidelity());
    }
    doc.mean_final_fidelity = sum / static_cast<double>(traces.size());
    doc.min_final_fidelity = mn;
  }
  return doc;
}

double min_final_fidelity(const std::vector<protocol::ProtocolTrace>& traces) {
  double mn = 1.0;
  for (const auto& t : traces) mn = std::min(mn, t.final_fidelity());
  return mn;
}

struct CommonOpts {
  std::string target = "zero:2";
  std::string rho0 = "mixed";
  std::string mode = "kraus";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int trials = 1;
  std::string out = "-";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_target = true, bool with_mode = true) {
  if (with_target) cmd->add_option("--target", o.target, "target state specification");
  cmd->add_option("--rho0", o.rho0, "initial state: mixed | random:<seed> | file:<path>");
  if (with_mode) cmd->add_option("--mode", o.mode, "kraus | coherent | trajectory");
  cmd->add_option("--seed", o.seed, "master seed (default: SPLITPUMP_SEED or 0)")
      ->each([&o](const std::string&) { o.seed_given = true; });
  cmd->add_option("--trials", o.trials, "number of runs")->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "trace output path, '-' for stdout");
}

int cmd_stabilize(const CommonOpts& o) {
  const cli::TargetSpec target = cli::parse_target(o.target);
  const protocol::Mode mode = protocol::mode_from_string(o.mode);
  const qmath::DensityMatrix rho0 = cli::make_rho0(o.rho0, target.ket.num_qubits());
  const auto decomp = subspaces::build_splitting(target.ket);

  const auto traces = run_trials(o.trials, [&](std::uint64_t t) {
    return protocol::stabilize(decomp, rho0, mode, Rng::mix(o.seed, t));
  });
  emit(aggregate(traces, target.text, o.seed), o.out);

  if (mode == protocol::Mode::kTrajectory) return kExitOk;
  return min_final_fidelity(traces) >= kFidelityGate ? kExitOk : kExitThreshold;
}

int cmd_dead_beat(const CommonOpts& o) {
  const cli::TargetSpec target = cli::parse_target(o.target);
  const std::size_t n = target.ket.num_qubits();
  const qmath::DensityMatrix rho0 = cli::make_rho0(o.rho0, n);

  std::vector<qmath::Ket> basis;
  for (std::size_t k = 0; k < target.ket.dim(); ++k)
    basis.push_back(qmath::Ket::basis_state(n, k));

  const auto traces = run_trials(o.trials, [&](std::uint64_t t) {
    const auto result =
        protocol::dead_beat_prepare(target.ket, rho0, basis, Rng::mix(o.seed, t));
    protocol::ProtocolTrace trace{target.ket, protocol::Mode::kTrajectory, Rng::mix(o.seed, t), {}};
    trace.steps.push_back(protocol::StepRecord{
        1, result.final_state, qmath::fidelity(result.final_state, target.ket), {1}, {true}, true});
    return trace;
  });
  emit(aggregate(traces, target.text, o.seed), o.out);
  return min_final_fidelity(traces) >= kFidelityGate ? kExitOk : kExitThreshold;
}

int cmd_bell_pump(const CommonOpts& o, bool simplified) {
  const protocol::Mode mode = protocol::mode_from_string(o.mode);
  const qmath::DensityMatrix rho0 = cli::make_rho0(o.rho0, 2);
  const auto traces = run_trials(o.trials, [&](std::uint64_t t) {
    return iontrap::bell_pump(rho0, simplified, Rng::mix(o.seed, t), mode);
  });
  emit(aggregate(traces, "bell:psi-", o.seed), o.out);
  return min_final_fidelity(traces) >= kFidelityGate ? kExitOk : kExitThreshold;
}

int cmd_ghz_pump(const CommonOpts& o, std::size_t n) {
  const protocol::Mode mode = protocol::mode_from_string(o.mode);
  const qmath::DensityMatrix rho0 = cli::make_rho0(o.rho0, n);
  const auto traces = run_trials(o.trials, [&](std::uint64_t t) {
    return iontrap::ghz_pump(n, rho0, Rng::mix(o.seed, t), mode);
  });
  emit(aggregate(traces, "ghz:" + std::to_string(n), o.seed), o.out);
  if (mode == protocol::Mode::kTrajectory) return kExitOk;
  return min_final_fidelity(traces) >= kFidelityGate ? kExitOk : kExitThreshold;
}

int cmd_perturb(const CommonOpts& o, double epsilon) {
  const cli::TargetSpec target = cli::parse_target(o.target);
  const qmath::DensityMatrix rho0 = cli::make_rho0(o.rho0, target.ket.num_qubits());
  const auto traces = run_trials(o.trials, [&](std::uint64_t t) {
    return protocol::perturbed_stabilize(target.ket, rho0, epsilon, Rng::mix(o.seed, t));
  });
  cli::TraceDoc doc = aggregate(traces, target.text, o.seed);
  doc.epsilon = epsilon;
  emit(doc, o.out);
  return kExitOk;  // a perturbed run reports, it does not gate
}

int cmd_verify_ms() {
  const cli::VerifyMsReport rep = cli::run_verify_ms();
  cli::print_verify_ms(std::cout, rep);
  return rep.pass() ? kExitOk : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitpump: finite-step pure-state preparation by subspace pumping"};
  app.require_subcommand(1);

  CommonOpts stab_opts, dead_opts, bell_opts, ghz_opts, pert_opts;
  bool simplified = false;
  std::size_t ghz_n = 3;
  double epsilon = 0.0;

  CLI::App* stab = app.add_subcommand("stabilize", "N-step preparation of a target state");
  add_common(stab, stab_opts);

  CLI::App* dead = app.add_subcommand("dead-beat", "one-step measure-and-steer preparation");
  add_common(dead, dead_opts, true, false);

  CLI::App* bell = app.add_subcommand("bell-pump", "two-cycle MS-gate pumping into bell:psi-");
  add_common(bell, bell_opts, false, true);
  bell->add_flag("--simplified", simplified, "single MS gate per cycle");

  CLI::App* ghz = app.add_subcommand("ghz-pump", "stabilizer pumping into ghz:<n>");
  add_common(ghz, ghz_opts, false, true);
  ghz->add_option("--n", ghz_n, "number of qubits (3 or 4)")->check(CLI::Range(3, 4));

  CLI::App* verify = app.add_subcommand("verify-ms", "check the MS-gate decompositions");

  CLI::App* pert = app.add_subcommand("perturb", "N-step preparation with noisy step unitaries");
  add_common(pert, pert_opts, true, false);
  pert->add_option("--epsilon", epsilon, "per-step unitary error magnitude")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);

    for (CommonOpts* o : {&stab_opts, &dead_opts, &bell_opts, &ghz_opts, &pert_opts})
      if (!o->seed_given) o->seed = default_seed();

    if (stab->parsed()) return cmd_stabilize(stab_opts);
    if (dead->parsed()) return cmd_dead_beat(dead_opts);
    if (bell->parsed()) return cmd_bell_pump(bell_opts, simplified);
    if (ghz->parsed()) return cmd_ghz_pump(ghz_opts, ghz_n);
    if (verify->parsed()) return cmd_verify_ms();
    if (pert->parsed()) return cmd_perturb(pert_opts, epsilon);
    return kExitInput;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const MalformedInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
