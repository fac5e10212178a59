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

// Steady-state reflection/transmission of a spin-QD in a double-sided
// microcavity, and the photon-spin scattering maps built from them.

#pragma once

#include "qdc/hilbert.hpp"

namespace qdc {

// Rates and detunings in units of the cavity field decay rate.
struct CavityParams {
  double g = 0.0;        // X- / cavity coupling
  double kappa = 1.0;    // cavity field decay (normalization)
  double kappa_s = 0.0;  // side leakage
  double gamma = 0.1;    // X- dipole decay
  double delta_c = 0.0;  // omega_c - omega
  double delta_x = 0.0;  // omega_X - omega

  // Throws PreconditionError.
  void validate() const;
};

struct ScatterCoeffs {
  Complex t;   // hot-cavity transmission
  Complex r;   // hot-cavity reflection
  Complex t0;  // cold-cavity transmission
  Complex r0;  // cold-cavity reflection

  // |r| = |t0| = 1, |t| = |r0| = 0.
  static ScatterCoeffs ideal() { return {0.0, 1.0, -1.0, 0.0}; }
};

/// Hot-cavity coefficients from the full detuned input-output expression,
/// cold-cavity coefficients from the same expression at g = 0. Both
/// reflections follow r = 1 + t.
///
/// Throws SingularParameterError when a denominator magnitude drops below
/// 1e-15 (for example g = gamma = 0 on resonance).
ScatterCoeffs coefficients(const CavityParams& params);

// Lossless spin-dependent scattering: photons whose (polarization, direction)
// couples to the spin are reflected (polarization and direction flip, +1);
// the rest are transmitted with a -1 phase. Spatial mode is unchanged.
PhotonSpinMap ideal_scatter();

/// Lossy scattering using the coefficient magnitudes with the fixed signs of
/// the on-resonance model. Coupled inputs go to |r| (flipped) + |t| (kept);
/// uncoupled inputs to -|t0| (kept) - |r0| (flipped). Throws
/// InvalidCoefficientError if any magnitude exceeds 1.
PhotonSpinMap realistic_scatter(const ScatterCoeffs& coeffs);

// True when the photon label couples to the X- transition for this spin.
bool couples(Polarization pol, Propagation dir, SpinBasis spin);

}  // namespace qdc
