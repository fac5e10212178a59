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

#include "qdc/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "qdc/error.hpp"
#include "qdc/metrics.hpp"

namespace qdc {
namespace {

struct OutputName {
  SweepOutput output;
  std::string_view name;
};

constexpr std::array<OutputName, 8> kOutputNames{{
    {SweepOutput::FCnot, "f_cnot"},
    {SweepOutput::FToffoli, "f_toffoli"},
    {SweepOutput::EtaCnot, "eta_cnot"},
    {SweepOutput::EtaToffoli, "eta_toffoli"},
    {SweepOutput::SimFCnot, "sim_f_cnot"},
    {SweepOutput::SimEtaCnot, "sim_eta_cnot"},
    {SweepOutput::SimFToffoli, "sim_f_toffoli"},
    {SweepOutput::SimEtaToffoli, "sim_eta_toffoli"},
}};

void validate_range(const GridRange& r, const std::string& field) {
  if (r.steps < 2) throw ConfigError(field, "steps must be at least 2");
  if (!std::isfinite(r.min) || !std::isfinite(r.max)) throw ConfigError(field, "bounds must be finite");
  if (!(r.min < r.max)) throw ConfigError(field, "min must be less than max");
  if (r.min < 0.0 || r.max > 100.0) throw ConfigError(field, "range must lie within [0, 100]");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SweepRow evaluate(const SweepSpec& spec, double g, double ks) {
  CavityParams params;
  params.g = g;
  params.kappa_s = ks;
  params.gamma = spec.gamma_over_kappa;
  const ScatterCoeffs coeffs = coefficients(params);
  const GateFigures fig = closed_form_figures(coeffs);
  const GateMode mode = realistic(coeffs);

  const std::array<QubitState, 3> plus{QubitState::plus(), QubitState::plus(), QubitState::plus()};
  const auto cnot_in = std::span<const QubitState>(plus).first(2);
  const auto toffoli_in = std::span<const QubitState>(plus);

  SweepRow row{g, ks, {}};
  row.values.reserve(spec.outputs.size());
  for (SweepOutput out : spec.outputs) {
    double v = 0.0;
    switch (out) {
      case SweepOutput::FCnot: v = fig.f_cnot; break;
      case SweepOutput::FToffoli: v = fig.f_toffoli; break;
      case SweepOutput::EtaCnot: v = fig.eta_cnot; break;
      case SweepOutput::EtaToffoli: v = fig.eta_toffoli; break;
      case SweepOutput::SimFCnot: v = simulated_fidelity(Gate::Cnot, cnot_in, mode, spec.convention); break;
      case SweepOutput::SimEtaCnot: v = simulated_efficiency(Gate::Cnot, cnot_in, mode); break;
      case SweepOutput::SimFToffoli:
        v = simulated_fidelity(Gate::Toffoli, toffoli_in, mode, spec.convention);
        break;
      case SweepOutput::SimEtaToffoli: v = simulated_efficiency(Gate::Toffoli, toffoli_in, mode); break;
    }
    row.values.push_back(v);
  }
  return row;
}

}  // namespace

double GridRange::at(std::size_t i) const {
  if (i + 1 >= steps) return max;
  return min + static_cast<double>(i) * (max - min) / static_cast<double>(steps - 1);
}

std::string_view column_name(SweepOutput output) {
  for (const auto& n : kOutputNames) {
    if (n.output == output) return n.name;
  }
  return "?";
}

std::optional<SweepOutput> parse_sweep_output(std::string_view name) {
  for (const auto& n : kOutputNames) {
    if (n.name == name) return n.output;
  }
  return std::nullopt;
}

bool is_simulated(SweepOutput output) {
  return output == SweepOutput::SimFCnot || output == SweepOutput::SimEtaCnot ||
         output == SweepOutput::SimFToffoli || output == SweepOutput::SimEtaToffoli;
}

void SweepSpec::validate() const {
  validate_range(g_over_kappa, "g_over_kappa");
  validate_range(kappa_s_over_kappa, "kappa_s_over_kappa");
  if (!std::isfinite(gamma_over_kappa) || gamma_over_kappa < 0.0 || gamma_over_kappa > 100.0) {
    throw ConfigError("gamma_over_kappa", "must lie within [0, 100]");
  }
  if (outputs.empty()) throw ConfigError("outputs", "at least one output column is required");
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (std::find(outputs.begin() + static_cast<std::ptrdiff_t>(i) + 1, outputs.end(), outputs[i]) !=
        outputs.end()) {
      throw ConfigError("outputs", "duplicate column " + std::string(column_name(outputs[i])));
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  const std::size_t ng = spec.g_over_kappa.steps;
  const std::size_t nk = spec.kappa_s_over_kappa.steps;
  const std::size_t total = ng * nk;
  std::vector<SweepRow> rows(total);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < total && !failed; i = next++) {
      try {
        rows[i] = evaluate(spec, spec.g_over_kappa.at(i / nk), spec.kappa_s_over_kappa.at(i % nk));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_csv(std::ostream& out, const SweepSpec& spec, std::span<const SweepRow> rows) {
  out << "g_over_kappa,kappa_s_over_kappa";
  for (SweepOutput o : spec.outputs) out << ',' << column_name(o);
  out << '\n';
  for (const auto& row : rows) {
    out << format_double(row.g_over_kappa) << ',' << format_double(row.kappa_s_over_kappa);
    for (double v : row.values) out << ',' << format_double(v);
    out << '\n';
  }
}

void write_json(std::ostream& out, const SweepSpec& spec, std::span<const SweepRow> rows) {
  nlohmann::ordered_json doc;
  doc["gamma_over_kappa"] = spec.gamma_over_kappa;
  auto columns = nlohmann::ordered_json::array({"g_over_kappa", "kappa_s_over_kappa"});
  for (SweepOutput o : spec.outputs) columns.push_back(std::string(column_name(o)));
  doc["columns"] = columns;
  auto data = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    obj["g_over_kappa"] = row.g_over_kappa;
    obj["kappa_s_over_kappa"] = row.kappa_s_over_kappa;
    for (std::size_t i = 0; i < spec.outputs.size(); ++i) {
      obj[std::string(column_name(spec.outputs[i]))] = row.values[i];
    }
    data.push_back(std::move(obj));
  }
  doc["rows"] = std::move(data);
  out << doc.dump(2) << '\n';
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto pos = s.find(',', start);
      cells.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return cells;
  };
  if (!std::getline(in, line)) throw ConfigError("csv", "missing header");
  table.header = split(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw ConfigError("csv", "line " + std::to_string(line_no) + " has the wrong number of cells");
    }
    std::vector<double> values;
    for (const auto& c : cells) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc{} || ptr != c.data() + c.size()) {
        throw ConfigError("csv", "line " + std::to_string(line_no) + ": bad number '" + c + "'");
      }
      values.push_back(v);
    }
    table.rows.push_back(std::move(values));
  }
  return table;
}

}  // namespace qdc
