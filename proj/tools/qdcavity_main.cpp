// Copyright 2026 The qdcavity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qdcavity: coefficient queries, gate simulation, truth tables, sweeps and
// decoherence reports.
//
// Exit codes: 0 success, 1 configuration error, 2 internal invariant
// violation (including a failing truth table).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qdc/circuits.hpp"
#include "qdc/error.hpp"
#include "qdc/report.hpp"
#include "qdc/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInvariant = 2;

qdc::QubitState parse_qubit(const std::string& text, const std::string& flag) {
  if (text == "R" || text == "r") return qdc::QubitState::r();
  if (text == "L" || text == "l") return qdc::QubitState::l();
  if (text == "+" || text == "plus") return qdc::QubitState::plus();
  if (text == "-" || text == "minus") return qdc::QubitState::minus();
  // "alpha,beta" as reals, normalized here.
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    try {
      const double a = std::stod(text.substr(0, comma));
      const double b = std::stod(text.substr(comma + 1));
      const double n = std::hypot(a, b);
      if (n > 0.0) return {a / n, b / n};
    } catch (const std::exception&) {
    }
  }
  throw qdc::ConfigError(flag, "expected R, L, plus, minus or 'alpha,beta', got '" + text + "'");
}

qdc::Gate parse_gate(const std::string& name) {
  if (name == "cnot") return qdc::Gate::Cnot;
  if (name == "toffoli") return qdc::Gate::Toffoli;
  throw qdc::ConfigError("gate", "expected cnot or toffoli");
}

struct CavityFlags {
  double g = 2.4;
  double kappa_s = 0.0;
  double gamma = 0.1;
  double delta_c = 0.0;
  double delta_x = 0.0;

  void add_to(CLI::App& cmd, bool detunings) {
    cmd.add_option("--g", g, "Coupling strength g/kappa")->capture_default_str();
    cmd.add_option("--kappa-s", kappa_s, "Side leakage kappa_s/kappa")->capture_default_str();
    cmd.add_option("--gamma", gamma, "Dipole decay gamma/kappa")->capture_default_str();
    if (detunings) {
      cmd.add_option("--delta-c", delta_c, "Cavity detuning (omega_c - omega)/kappa")->capture_default_str();
      cmd.add_option("--delta-x", delta_x, "Dipole detuning (omega_X - omega)/kappa")->capture_default_str();
    }
  }

  qdc::CavityParams params() const {
    qdc::CavityParams p;
    p.g = g;
    p.kappa_s = kappa_s;
    p.gamma = gamma;
    p.delta_c = delta_c;
    p.delta_x = delta_x;
    try {
      p.validate();
    } catch (const qdc::PreconditionError& e) {
      throw qdc::ConfigError("cavity", e.what());
    }
    return p;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw qdc::ConfigError("out", "cannot open '" + path + "' for writing");
  write(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photonic CNOT/Toffoli gates mediated by a quantum-dot spin in a double-sided cavity"};
  app.set_config("--config", "", "key=value configuration file (flags override it)");
  app.require_subcommand(1);

  // coeffs
  CavityFlags coeff_flags;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print t, r, t0, r0 as 'name re im'");
  coeff_flags.add_to(*coeffs_cmd, true);

  // simulate
  std::string sim_gate;
  std::string control = "plus";
  std::string control2 = "plus";
  std::string target = "plus";
  std::string sim_mode = "ideal";
  bool show_trace = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  CavityFlags sim_flags;
  auto* sim_cmd = app.add_subcommand("simulate", "Run one gate and print branches, survival and fidelity");
  sim_cmd->add_option("gate", sim_gate, "cnot or toffoli")->required()->check(CLI::IsMember({"cnot", "toffoli"}));
  sim_cmd->add_option("--control", control, "Control (first control for toffoli): R, L, plus, minus or a,b")
      ->capture_default_str();
  sim_cmd->add_option("--control2", control2, "Second control (toffoli only)")->capture_default_str();
  sim_cmd->add_option("--target", target, "Target qubit")->capture_default_str();
  sim_cmd->add_option("--mode", sim_mode, "ideal or realistic")
      ->check(CLI::IsMember({"ideal", "realistic"}))
      ->capture_default_str();
  sim_flags.add_to(*sim_cmd, false);
  sim_cmd->add_flag("--trace", show_trace, "Print the named intermediate states");
  sim_cmd->add_option("--samples", samples, "Draw this many spin-measurement outcomes")->capture_default_str();
  sim_cmd->add_option("--seed", seed, "Seed for --samples")->capture_default_str();

  // truth-table
  std::string tt_gate;
  auto* tt_cmd = app.add_subcommand("truth-table", "Check ideal gates on every basis input");
  tt_cmd->add_option("gate", tt_gate, "cnot or toffoli")->required()->check(CLI::IsMember({"cnot", "toffoli"}));

  // sweep
  qdc::SweepSpec spec;
  std::string outputs = "f_cnot,f_toffoli,eta_cnot,eta_toffoli";
  std::string format = "csv";
  std::string convention = "per-branch";
  std::string out_path;
  unsigned threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate figures over a (g/kappa, kappa_s/kappa) grid");
  sweep_cmd->add_option("--g-min", spec.g_over_kappa.min)->capture_default_str();
  sweep_cmd->add_option("--g-max", spec.g_over_kappa.max)->capture_default_str();
  sweep_cmd->add_option("--g-steps", spec.g_over_kappa.steps)->capture_default_str();
  sweep_cmd->add_option("--ks-min", spec.kappa_s_over_kappa.min)->capture_default_str();
  sweep_cmd->add_option("--ks-max", spec.kappa_s_over_kappa.max)->capture_default_str();
  sweep_cmd->add_option("--ks-steps", spec.kappa_s_over_kappa.steps)->capture_default_str();
  sweep_cmd->add_option("--gamma", spec.gamma_over_kappa, "gamma/kappa")->capture_default_str();
  sweep_cmd->add_option("--outputs", outputs, "Comma-separated columns")->capture_default_str();
  sweep_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_option("--convention", convention, "per-branch, pre-measurement or unnormalized (sim_f_* columns)")
      ->check(CLI::IsMember({"per-branch", "pre-measurement", "unnormalized"}))
      ->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

  // decoherence
  qdc::DecoherenceParams deco;
  double deco_fidelity = 1.0;
  auto* deco_cmd = app.add_subcommand("decoherence", "Decoherence factors and trion density matrix (times in ns)");
  deco_cmd->add_option("--t2e", deco.t2e, "Electron spin coherence time")->capture_default_str();
  deco_cmd->add_option("--dt", deco.dt, "Interval between input photons")->capture_default_str();
  deco_cmd->add_option("--tau", deco.tau, "Cavity photon lifetime")->capture_default_str();
  deco_cmd->add_option("--t2", deco.t2, "Trion coherence time")->capture_default_str();
  deco_cmd->add_option("--fidelity", deco_fidelity, "Fidelity to scale by the factors")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*coeffs_cmd) {
      std::cout << qdc::format_coefficients(qdc::coefficients(coeff_flags.params()));
      return kExitOk;
    }

    if (*sim_cmd) {
      const qdc::Gate gate = parse_gate(sim_gate);
      std::vector<qdc::QubitState> inputs{parse_qubit(control, "control")};
      if (gate == qdc::Gate::Toffoli) inputs.push_back(parse_qubit(control2, "control2"));
      inputs.push_back(parse_qubit(target, "target"));

      const bool is_ideal = sim_mode == "ideal";
      const qdc::GateMode mode = is_ideal ? qdc::GateMode{qdc::IdealScattering{}} : qdc::realistic(sim_flags.params());
      const qdc::GateResult result = qdc::run_gate(gate, inputs, mode);

      std::cout.precision(12);
      std::cout << "gate " << qdc::to_string(gate) << "\nmode " << sim_mode << '\n';
      std::cout << "survival " << result.survival << '\n';
      if (show_trace) {
        for (const auto& entry : result.trace) {
          std::cout << "trace " << entry.name << '\n' << qdc::serialize(entry.state);
        }
      }
      for (const auto& b : result.branches) {
        std::cout << "branch " << qdc::to_string(b.outcome) << " probability " << b.probability << '\n'
                  << qdc::serialize(b.photons);
      }
      const auto ideal = qdc::oracle_output(gate, inputs);
      for (const auto& b : result.branches) {
        if (b.probability <= 0.0) continue;
        std::cout << "oracle_fidelity " << qdc::to_string(b.outcome) << ' ' << qdc::fidelity(b.photons, ideal, true)
                  << '\n';
      }
      if (!is_ideal) {
        std::cout << "fidelity_per_branch "
                  << qdc::simulated_fidelity(gate, inputs, mode, qdc::FidelityConvention::PerBranchAveraged) << '\n'
                  << "fidelity_pre_measurement "
                  << qdc::simulated_fidelity(gate, inputs, mode, qdc::FidelityConvention::PreMeasurement) << '\n'
                  << "fidelity_unnormalized "
                  << qdc::simulated_fidelity(gate, inputs, mode, qdc::FidelityConvention::UnnormalizedOverlap)
                  << '\n';
      }
      if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::discrete_distribution<int> pick{result.branches[0].probability, result.branches[1].probability};
        std::size_t ups = 0;
        for (std::size_t i = 0; i < samples; ++i) ups += pick(rng) == 0 ? 1 : 0;
        std::cout << "samples " << samples << " up " << ups << " down " << samples - ups << '\n';
      }
      return kExitOk;
    }

    if (*tt_cmd) {
      const auto table = qdc::truth_table(parse_gate(tt_gate));
      std::cout << qdc::format_truth_table(table);
      return table.all_pass() ? kExitOk : kExitInvariant;
    }

    if (*sweep_cmd) {
      spec.outputs.clear();
      for (const auto& name : split_list(outputs)) {
        const auto o = qdc::parse_sweep_output(name);
        if (!o) throw qdc::ConfigError("outputs", "unknown column '" + name + "'");
        spec.outputs.push_back(*o);
      }
      spec.format = format == "json" ? qdc::SweepFormat::Json : qdc::SweepFormat::Csv;
      spec.convention = convention == "pre-measurement" ? qdc::FidelityConvention::PreMeasurement
                        : convention == "unnormalized" ? qdc::FidelityConvention::UnnormalizedOverlap
                                                       : qdc::FidelityConvention::PerBranchAveraged;
      const auto rows = qdc::run_sweep(spec, threads);
      emit(out_path, [&](std::ostream& os) {
        if (spec.format == qdc::SweepFormat::Json) {
          qdc::write_json(os, spec, rows);
        } else {
          qdc::write_csv(os, spec, rows);
        }
      });
      return kExitOk;
    }

    if (*deco_cmd) {
      try {
        deco.validate();
      } catch (const qdc::PreconditionError& e) {
        throw qdc::ConfigError("decoherence", e.what());
      }
      std::cout << qdc::decoherence_report(deco, deco_fidelity);
      return kExitOk;
    }
  } catch (const qdc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qdc::SingularParameterError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qdc::Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}
