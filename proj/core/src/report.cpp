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

#include "qdc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qdc {
namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string word(const std::vector<Polarization>& pols) {
  std::string s;
  for (auto p : pols) s += to_string(p);
  return s;
}

// Reads the polarizations of a single-ket photon state; empty if the state
// is a superposition.
std::vector<Polarization> decode(const StateVector& photons) {
  if (photons.size() != 1) return {};
  std::vector<Polarization> pols;
  for (const auto& p : photons.amplitudes().begin()->first.photons) pols.push_back(p.pol);
  return pols;
}

}  // namespace

std::string format_coefficients(const ScatterCoeffs& c) {
  std::ostringstream out;
  auto line = [&](const char* name, Complex v) {
    out << name << ' ' << fmt("%.17g", v.real()) << ' ' << fmt("%.17g", v.imag()) << '\n';
  };
  line("t", c.t);
  line("r", c.r);
  line("t0", c.t0);
  line("r0", c.r0);
  return out.str();
}

bool TruthTable::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const TruthTableRow& r) { return r.pass; });
}

TruthTable truth_table(Gate gate) {
  const std::size_t n = gate == Gate::Cnot ? 2 : 3;
  TruthTable table{gate, {}};
  for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
    std::vector<QubitState> inputs;
    TruthTableRow row;
    for (std::size_t q = 0; q < n; ++q) {
      const bool is_l = (idx >> (n - 1 - q)) & 1;
      inputs.push_back(is_l ? QubitState::l() : QubitState::r());
      row.input.push_back(is_l ? Polarization::L : Polarization::R);
    }
    const StateVector expected = oracle_output(gate, inputs);
    row.expected = decode(expected);

    const GateResult result = run_gate(gate, inputs, IdealScattering{});
    row.min_fidelity = 1.0;
    bool consistent = true;
    for (const auto& b : result.branches) {
      if (b.probability <= 0.0) continue;
      row.min_fidelity = std::min(row.min_fidelity, fidelity(b.photons, expected, true));
      const auto out = decode(b.photons);
      if (row.output.empty()) row.output = out;
      consistent = consistent && out == row.output;
    }
    row.pass = consistent && row.output == row.expected && row.min_fidelity >= 1.0 - 1e-9;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_truth_table(const TruthTable& table) {
  std::ostringstream out;
  out << to_string(table.gate) << " truth table (ideal scattering)\n";
  out << "input  output  expected  fidelity  result\n";
  for (const auto& row : table.rows) {
    const std::string in = word(row.input);
    const std::string got = row.output.empty() ? "?" : word(row.output);
    const std::string want = word(row.expected);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-6s %-7s %-9s %-9.6f %s\n", in.c_str(), got.c_str(), want.c_str(),
                  row.min_fidelity, row.pass ? "PASS" : "FAIL");
    out << buf;
  }
  out << (table.all_pass() ? "all rows PASS\n" : "MISMATCH\n");
  return out.str();
}

std::string decoherence_report(const DecoherenceParams& p, double fidelity) {
  p.validate();
  const double spin = spin_decoherence_factor(p);
  const double exciton = exciton_dephasing_factor(p);
  std::ostringstream out;
  out << "parameters: t2e=" << fmt("%g", p.t2e) << " dt=" << fmt("%g", p.dt) << " tau=" << fmt("%g", p.tau)
      << " t2=" << fmt("%g", p.t2) << '\n';
  out << "spin_decoherence_factor " << fmt("%.8f", spin) << '\n';
  out << "exciton_dephasing_factor " << fmt("%.8f", exciton) << '\n';
  out << "fidelity_in " << fmt("%.8f", fidelity) << '\n';
  out << "fidelity_spin " << fmt("%.8f", fidelity * spin) << '\n';
  out << "fidelity_exciton_as_factor "
      << fmt("%.8f", apply_exciton_dephasing(fidelity, p, ExcitonReading::MultiplicativeFactor)) << '\n';
  out << "fidelity_exciton_as_reduction "
      << fmt("%.8f", apply_exciton_dephasing(fidelity, p, ExcitonReading::ReductionAmount)) << '\n';
  out << "fidelity_combined_as_factor "
      << fmt("%.8f", spin * apply_exciton_dephasing(fidelity, p, ExcitonReading::MultiplicativeFactor)) << '\n';
  out << "fidelity_combined_as_reduction "
      << fmt("%.8f", spin * apply_exciton_dephasing(fidelity, p, ExcitonReading::ReductionAmount)) << '\n';
  for (const auto& [label, t] : {std::pair{"0", 0.0}, std::pair{"tau", p.tau}, std::pair{"t2", p.t2}}) {
    const auto rho = trion_density_matrix(t, p.t2);
    out << "rho_e(t=" << label << ") [[" << fmt("%.8f", rho(0, 0).real()) << ", " << fmt("%.8f", rho(0, 1).real())
        << "], [" << fmt("%.8f", rho(1, 0).real()) << ", " << fmt("%.8f", rho(1, 1).real()) << "]]\n";
  }
  return out.str();
}

}  // namespace qdc
