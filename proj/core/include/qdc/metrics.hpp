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

// Closed-form gate fidelities and efficiencies, and decoherence factors.

#pragma once

#include <Eigen/Dense>

#include "qdc/cavity.hpp"

namespace qdc {

struct GateFigures {
  double f_cnot = 0.0;
  double f_toffoli = 0.0;
  double eta_cnot = 0.0;
  double eta_toffoli = 0.0;
  double intensity_sum = 0.0;  // |t0|^2 + |r0|^2 + |t|^2 + |r|^2
  double toffoli_term1 = 0.0;
  double toffoli_term2 = 0.0;
  double toffoli_term3 = 0.0;
};

/// Fidelities and efficiencies of both gates from the coefficient
/// magnitudes. The Toffoli polynomial is kept term-for-term so each term can be
/// audited on its own:
///
///   F_CNOT = ((|t0| + |r|) / 2)^2
///   F_T    = ((toffoli_term1 + 2 toffoli_term2 - toffoli_term3) / 32)^2
///   eta_CNOT = (1/2 + 5 intensity_sum / 4) / 3
///   eta_T    = (1 + 5 intensity_sum / 4 + intensity_sum^4 / 32) / 4
GateFigures closed_form_figures(const ScatterCoeffs& coeffs);

// Times in one consistent unit (ns in the CLI).
struct DecoherenceParams {
  double t2e = 3000.0;  // electron spin coherence time
  double dt = 4.5;      // interval between input photons
  double tau = 10.0;    // cavity photon lifetime
  double t2 = 100.0;    // trion coherence time

  // t2e and t2 must be positive, dt and tau non-negative.
  void validate() const;
};

// [1 + exp(-dt / t2e)] / 2
double spin_decoherence_factor(const DecoherenceParams& p);

// 1 - exp(-tau / t2).
double exciton_dephasing_factor(const DecoherenceParams& p);

// Two readings of the exciton term: scale the fidelity by the factor, or
// subtract it as a relative reduction, F * (1 - factor).
enum class ExcitonReading { MultiplicativeFactor, ReductionAmount };

double apply_exciton_dephasing(double fidelity, const DecoherenceParams& p, ExcitonReading reading);

// Electron state (|up> + |down>)/sqrt2 after trion dephasing for time t:
// 1/2 [[1, e^{-t/2T2}], [e^{-t/2T2}, 1]].
Eigen::Matrix2cd trion_density_matrix(double t, double t2);

}  // namespace qdc
