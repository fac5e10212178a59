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

#include "qdc/hilbert.hpp"

#include <cmath>

#include "qdc/error.hpp"

namespace qdc {
namespace {

Layout layout_of(const BasisKet& ket) { return Layout{ket.photons.size(), ket.spin.has_value()}; }

void require_same_layout(const StateVector& a, const StateVector& b, const char* what) {
  if (a.layout() != b.layout()) {
    throw StructuralError(std::string(what) + ": subsystem layouts differ");
  }
}

void require_photon(const StateVector& state, std::size_t photon) {
  if (photon >= state.layout().photons) {
    throw StructuralError("photon index " + std::to_string(photon) + " out of range");
  }
}

}  // namespace

StateVector StateVector::basis(BasisKet ket, Complex amplitude) {
  StateVector s(layout_of(ket));
  s.add(ket, amplitude);
  return s;
}

StateVector StateVector::spin(SpinBasis sb) { return basis(BasisKet{{}, sb}); }

StateVector StateVector::photon(Complex alpha, Complex beta, Mode mode, Propagation dir) {
  StateVector s(Layout{1, false});
  s.add(BasisKet{{PhotonLabel{Polarization::R, dir, mode}}, std::nullopt}, alpha);
  s.add(BasisKet{{PhotonLabel{Polarization::L, dir, mode}}, std::nullopt}, beta);
  return s.pruned();
}

Complex StateVector::amplitude(const BasisKet& ket) const {
  auto it = amps_.find(ket);
  return it == amps_.end() ? Complex{} : it->second;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& [ket, amp] : amps_) sum += std::norm(amp);
  return sum;
}

void StateVector::add(const BasisKet& ket, Complex amplitude) {
  if (layout_of(ket) != layout_) {
    throw StructuralError("ket does not match state layout");
  }
  amps_[ket] += amplitude;
}

StateVector StateVector::pruned(double threshold) const {
  StateVector out(layout_);
  for (const auto& [ket, amp] : amps_) {
    if (std::abs(amp) >= threshold) out.amps_.emplace(ket, amp);
  }
  return out;
}

StateVector StateVector::scaled(Complex factor) const {
  StateVector out(layout_);
  for (const auto& [ket, amp] : amps_) out.amps_.emplace(ket, amp * factor);
  return out.pruned();
}

StateVector StateVector::normalized() const {
  const double n2 = norm_squared();
  if (n2 <= 0.0) throw DegenerateStateError("cannot normalize a zero state");
  return scaled(1.0 / std::sqrt(n2));
}

StateVector StateVector::filtered(const std::function<bool(const BasisKet&)>& keep) const {
  StateVector out(layout_);
  for (const auto& [ket, amp] : amps_) {
    if (keep(ket)) out.amps_.emplace(ket, amp);
  }
  return out;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same_layout(*this, other, "sum");
  for (const auto& [ket, amp] : other.amps_) amps_[ket] += amp;
  *this = pruned();
  return *this;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.layout().spin && b.layout().spin) {
    throw StructuralError("tensor: both factors declare the spin subsystem");
  }
  const Layout layout{a.layout().photons + b.layout().photons, a.layout().spin || b.layout().spin};
  StateVector out(layout);
  for (const auto& [ka, va] : a.amplitudes()) {
    for (const auto& [kb, vb] : b.amplitudes()) {
      BasisKet ket;
      ket.photons.reserve(layout.photons);
      ket.photons.insert(ket.photons.end(), ka.photons.begin(), ka.photons.end());
      ket.photons.insert(ket.photons.end(), kb.photons.begin(), kb.photons.end());
      ket.spin = ka.spin ? ka.spin : kb.spin;
      out.add(ket, va * vb);
    }
  }
  return out.pruned();
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_layout(a, b, "inner_product");
  Complex sum{};
  // Iterate the smaller map and probe the larger one.
  const bool a_small = a.size() <= b.size();
  const auto& small = a_small ? a : b;
  const auto& large = a_small ? b : a;
  for (const auto& [ket, amp] : small.amplitudes()) {
    const Complex other = large.amplitude(ket);
    sum += a_small ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return sum;
}

double fidelity(const StateVector& realistic, const StateVector& ideal, bool normalize) {
  const StateVector r = normalize ? realistic.normalized() : realistic;
  return std::norm(inner_product(r, ideal));
}

double overlap_fidelity(const StateVector& a, const StateVector& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na <= 0.0 || nb <= 0.0) throw DegenerateStateError("overlap of a zero state");
  return std::norm(inner_product(a, b)) / (na * nb);
}

double phase_distance(const StateVector& a, const StateVector& b) {
  require_same_layout(a, b, "phase_distance");
  const Complex overlap = inner_product(a, b);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  // a * phase should equal b.
  StateVector diff = a.scaled(phase);
  diff += b.scaled(-1.0);
  double worst = 0.0;
  for (const auto& [ket, amp] : diff.amplitudes()) worst = std::max(worst, std::abs(amp));
  return worst;
}

StateVector apply_photon_map(const StateVector& state, std::size_t photon, const PhotonMap& map) {
  require_photon(state, photon);
  StateVector out(state.layout());
  for (const auto& [ket, amp] : state.amplitudes()) {
    const auto image = map(ket.photons[photon]);
    if (!image) throw IncompleteMapError("photon map undefined on a reachable label");
    for (const auto& [label, coeff] : *image) {
      BasisKet next = ket;
      next.photons[photon] = label;
      out.add(next, amp * coeff);
    }
  }
  return out.pruned();
}

StateVector apply_photon_spin_map(const StateVector& state, std::size_t photon,
                                  const PhotonSpinMap& map) {
  require_photon(state, photon);
  if (!state.layout().spin) throw StructuralError("photon-spin map on a state without spin");
  StateVector out(state.layout());
  for (const auto& [ket, amp] : state.amplitudes()) {
    const auto image = map(PhotonSpin{ket.photons[photon], *ket.spin});
    if (!image) throw IncompleteMapError("photon-spin map undefined on a reachable label");
    for (const auto& [label, coeff] : *image) {
      BasisKet next = ket;
      next.photons[photon] = label.photon;
      next.spin = label.spin;
      out.add(next, amp * coeff);
    }
  }
  return out.pruned();
}

StateVector apply_spin_map(const StateVector& state, const SpinMap& map) {
  if (!state.layout().spin) throw StructuralError("spin map on a state without spin");
  StateVector out(state.layout());
  for (const auto& [ket, amp] : state.amplitudes()) {
    const auto image = map(*ket.spin);
    if (!image) throw IncompleteMapError("spin map undefined on a reachable label");
    for (const auto& [s, coeff] : *image) {
      BasisKet next = ket;
      next.spin = s;
      out.add(next, amp * coeff);
    }
  }
  return out.pruned();
}

std::vector<SpinBranch> measure_spin(const StateVector& state) {
  if (!state.layout().spin) throw StructuralError("measure_spin on a state without spin");
  const double total = state.norm_squared();
  if (total <= 0.0) throw DegenerateStateError("measure_spin on a zero state");

  const Layout photons_only{state.layout().photons, false};
  std::vector<SpinBranch> branches;
  for (SpinBasis outcome : {SpinBasis::Up, SpinBasis::Down}) {
    StateVector projected(photons_only);
    for (const auto& [ket, amp] : state.amplitudes()) {
      if (*ket.spin == outcome) projected.add(BasisKet{ket.photons, std::nullopt}, amp);
    }
    const double weight = projected.norm_squared();
    SpinBranch branch{outcome, weight / total, StateVector(photons_only)};
    if (weight > 0.0) branch.state = projected.normalized();
    branches.push_back(std::move(branch));
  }
  return branches;
}

double PolarizationDensity::purity() const {
  // tr(rho^2) for a Hermitian 2x2 matrix.
  return std::norm(rr) + std::norm(ll) + std::norm(rl) + std::norm(lr);
}

PolarizationDensity reduced_polarization(const StateVector& state, std::size_t photon) {
  require_photon(state, photon);
  const double n2 = state.norm_squared();
  if (n2 <= 0.0) throw DegenerateStateError("reduced density of a zero state");

  // Group amplitudes by the environment: every label except this photon's
  // polarization.
  std::map<BasisKet, std::pair<Complex, Complex>> env;
  for (const auto& [ket, amp] : state.amplitudes()) {
    BasisKet key = ket;
    key.photons[photon].pol = Polarization::R;
    auto& slot = env[key];
    (ket.photons[photon].pol == Polarization::R ? slot.first : slot.second) += amp;
  }
  PolarizationDensity rho{};
  for (const auto& [key, ab] : env) {
    const auto [a, b] = ab;
    rho.rr += a * std::conj(a);
    rho.rl += a * std::conj(b);
    rho.lr += b * std::conj(a);
    rho.ll += b * std::conj(b);
  }
  rho.rr /= n2;
  rho.rl /= n2;
  rho.lr /= n2;
  rho.ll /= n2;
  return rho;
}

}  // namespace qdc
