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

#include "qdc/metrics.hpp"

#include <cmath>

#include "qdc/error.hpp"

namespace qdc {

GateFigures closed_form_figures(const ScatterCoeffs& coeffs) {
  const double t0 = std::abs(coeffs.t0);
  const double r0 = std::abs(coeffs.r0);
  const double t = std::abs(coeffs.t);
  const double r = std::abs(coeffs.r);

  GateFigures f;
  f.f_cnot = std::pow((t0 + r) / 2.0, 2);

  // Recurring factors of the Toffoli polynomial.
  const double sum_sq = std::pow(t0 - r0 + r - t, 2);
  const double diff_sq = std::pow(t0 - r0 - r + t, 2);

  f.toffoli_term1 = (t0 - r0 - t + r) *
                    (r0 * (t0 - r0) * sum_sq + r0 * (r - t) * diff_sq + 4.0 * t0 * (r - t) + 4.0 * (t0 - r0));
  f.toffoli_term2 = r * (t0 - r0) * diff_sq + r * (r - t) * sum_sq + 4.0 * t * (t0 - r0) + 4.0 * (r - t);
  f.toffoli_term3 = r0 * sum_sq * diff_sq;
  f.f_toffoli = std::pow((f.toffoli_term1 + 2.0 * f.toffoli_term2 - f.toffoli_term3) / 32.0, 2);

  f.intensity_sum = t0 * t0 + r0 * r0 + t * t + r * r;
  f.eta_cnot = (0.5 + 5.0 * f.intensity_sum / 4.0) / 3.0;
  f.eta_toffoli = (1.0 + 5.0 * f.intensity_sum / 4.0 + std::pow(f.intensity_sum, 4) / 32.0) / 4.0;
  return f;
}

void DecoherenceParams::validate() const {
  if (!(t2e > 0.0)) throw PreconditionError("t2e must be positive");
  if (!(t2 > 0.0)) throw PreconditionError("t2 must be positive");
  if (!(dt >= 0.0)) throw PreconditionError("dt must be non-negative");
  if (!(tau >= 0.0)) throw PreconditionError("tau must be non-negative");
}

double spin_decoherence_factor(const DecoherenceParams& p) {
  p.validate();
  return (1.0 + std::exp(-p.dt / p.t2e)) / 2.0;
}

double exciton_dephasing_factor(const DecoherenceParams& p) {
  p.validate();
  return -std::expm1(-p.tau / p.t2);
}

double apply_exciton_dephasing(double fidelity, const DecoherenceParams& p, ExcitonReading reading) {
  const double factor = exciton_dephasing_factor(p);
  return reading == ExcitonReading::MultiplicativeFactor ? fidelity * factor : fidelity * (1.0 - factor);
}

Eigen::Matrix2cd trion_density_matrix(double t, double t2) {
  if (!(t >= 0.0)) throw PreconditionError("time must be non-negative");
  if (!(t2 > 0.0)) throw PreconditionError("t2 must be positive");
  const double coherence = std::exp(-t / (2.0 * t2));
  Eigen::Matrix2cd rho;
  rho << 1.0, coherence, coherence, 1.0;
  return rho / 2.0;
}

}  // namespace qdc
