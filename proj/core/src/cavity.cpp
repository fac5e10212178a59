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

#include "qdc/cavity.hpp"

#include <cmath>

#include "qdc/error.hpp"

namespace qdc {
namespace {

constexpr double kSingular = 1e-15;

Complex transmission(const CavityParams& p, double g) {
  const Complex i{0.0, 1.0};
  const Complex dipole = i * p.delta_x + p.gamma / 2.0;
  const Complex cavity = i * p.delta_c + p.kappa + p.kappa_s / 2.0;
  const Complex denom = dipole * cavity + g * g;
  if (std::abs(denom) < kSingular) {
    throw SingularParameterError("cavity response denominator vanishes");
  }
  return -p.kappa * dipole / denom;
}

}  // namespace

void CavityParams::validate() const {
  if (!(kappa > 0.0)) throw PreconditionError("kappa must be positive");
  if (!(g >= 0.0)) throw PreconditionError("g must be non-negative");
  if (!(kappa_s >= 0.0)) throw PreconditionError("kappa_s must be non-negative");
  if (!(gamma >= 0.0)) throw PreconditionError("gamma must be non-negative");
  if (!std::isfinite(delta_c) || !std::isfinite(delta_x)) {
    throw PreconditionError("detunings must be finite");
  }
}

ScatterCoeffs coefficients(const CavityParams& params) {
  params.validate();
  // Cold cavity: with g = 0 the dipole factor cancels.
  const Complex i{0.0, 1.0};
  const Complex cold_denom = i * params.delta_c + params.kappa + params.kappa_s / 2.0;
  if (std::abs(cold_denom) < kSingular) {
    throw SingularParameterError("cold-cavity denominator vanishes");
  }
  const Complex t0 = -params.kappa / cold_denom;
  const Complex t = transmission(params, params.g);
  return ScatterCoeffs{t, 1.0 + t, t0, 1.0 + t0};
}

bool couples(Polarization pol, Propagation dir, SpinBasis spin) {
  // Spin up couples to R-along and L-against; spin down to R-against and
  // L-along.
  const bool along = dir == Propagation::AlongZ;
  const bool r = pol == Polarization::R;
  return spin == SpinBasis::Up ? (r == along) : (r != along);
}

PhotonSpinMap ideal_scatter() {
  return [](const PhotonSpin& in) -> std::optional<Image<PhotonSpin>> {
    PhotonSpin out = in;
    if (couples(in.photon.pol, in.photon.dir, in.spin)) {
      out.photon.pol = flipped(in.photon.pol);
      out.photon.dir = reversed(in.photon.dir);
      return Image<PhotonSpin>{{out, 1.0}};
    }
    return Image<PhotonSpin>{{out, -1.0}};
  };
}

PhotonSpinMap realistic_scatter(const ScatterCoeffs& coeffs) {
  const double t = std::abs(coeffs.t);
  const double r = std::abs(coeffs.r);
  const double t0 = std::abs(coeffs.t0);
  const double r0 = std::abs(coeffs.r0);
  constexpr double slack = 1e-12;
  if (t > 1.0 + slack || r > 1.0 + slack || t0 > 1.0 + slack || r0 > 1.0 + slack) {
    throw InvalidCoefficientError("scattering coefficient magnitude exceeds 1");
  }
  return [=](const PhotonSpin& in) -> std::optional<Image<PhotonSpin>> {
    PhotonSpin flip = in;
    flip.photon.pol = flipped(in.photon.pol);
    flip.photon.dir = reversed(in.photon.dir);
    if (couples(in.photon.pol, in.photon.dir, in.spin)) {
      return Image<PhotonSpin>{{flip, r}, {in, t}};
    }
    return Image<PhotonSpin>{{in, -t0}, {flip, -r0}};
  };
}

}  // namespace qdc
