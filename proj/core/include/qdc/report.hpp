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

// Text reports used by the command-line tool.

#pragma once

#include <string>
#include <vector>

#include "qdc/circuits.hpp"
#include "qdc/metrics.hpp"

namespace qdc {

// `name re im` lines for t, r, t0, r0.
std::string format_coefficients(const ScatterCoeffs& coeffs);

struct TruthTableRow {
  std::vector<Polarization> input;
  std::vector<Polarization> output;    // decoded from the simulated output
  std::vector<Polarization> expected;  // from the oracle
  double min_fidelity = 0.0;           // worst branch against the oracle
  bool pass = false;
};

struct TruthTable {
  Gate gate = Gate::Cnot;
  std::vector<TruthTableRow> rows;

  bool all_pass() const;
};

// Ideal-mode run on every computational-basis input, checked against
// ideal_oracle.
TruthTable truth_table(Gate gate);
std::string format_truth_table(const TruthTable& table);

// Both decoherence factors under both readings, plus rho_e(t) at t = 0, tau
// and t2.
std::string decoherence_report(const DecoherenceParams& params, double fidelity = 1.0);

}  // namespace qdc
