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

// Parameter sweeps over (g/kappa, kappa_s/kappa) with CSV/JSON output.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/circuits.hpp"

namespace qdc {

struct GridRange {
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 2;

  // min + i (max - min) / (steps - 1); the last point is exactly max.
  double at(std::size_t i) const;
};

enum class SweepOutput {
  FCnot,
  FToffoli,
  EtaCnot,
  EtaToffoli,
  SimFCnot,
  SimEtaCnot,
  SimFToffoli,
  SimEtaToffoli,
};

std::string_view column_name(SweepOutput output);
std::optional<SweepOutput> parse_sweep_output(std::string_view name);
bool is_simulated(SweepOutput output);

enum class SweepFormat { Csv, Json };

struct SweepSpec {
  GridRange g_over_kappa{0.0, 5.0, 50};
  GridRange kappa_s_over_kappa{0.0, 1.0, 50};
  double gamma_over_kappa = 0.1;
  std::vector<SweepOutput> outputs{SweepOutput::FCnot, SweepOutput::FToffoli, SweepOutput::EtaCnot,
                                   SweepOutput::EtaToffoli};
  SweepFormat format = SweepFormat::Csv;
  // Used by the sim_* columns, which run every gate on |+>|+>(|+>).
  FidelityConvention convention = FidelityConvention::PerBranchAveraged;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

struct SweepRow {
  double g_over_kappa = 0.0;
  double kappa_s_over_kappa = 0.0;
  std::vector<double> values;  // one per requested output, in SweepSpec::outputs order
};

/// Evaluates every grid point, g outer and kappa_s inner. Points are spread
/// over `threads` workers (0 = hardware concurrency); rows come back in grid
/// order regardless.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

void write_csv(std::ostream& out, const SweepSpec& spec, std::span<const SweepRow> rows);
void write_json(std::ostream& out, const SweepSpec& spec, std::span<const SweepRow> rows);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
// Reads back what write_csv emits. Throws ConfigError on malformed input.
CsvTable read_csv(std::istream& in);

}  // namespace qdc
