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

// Sparse state vectors over a few polarization-encoded photons plus one
// optional electron spin. Basis kets carry explicit spatial-mode labels, so
// beam-splitter and switch routing is label rewriting.

#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdc {

using Complex = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr double kNormTolerance = 1e-9;

enum class Polarization : std::uint8_t { R, L };
enum class Propagation : std::uint8_t { AlongZ, AgainstZ };
enum class SpinBasis : std::uint8_t { Up, Down };

using Mode = std::uint16_t;

// Direction label carried by photons outside the cavity, where the
// propagation direction has no effect on any element.
inline constexpr Propagation kFreeSpace = Propagation::AlongZ;

// Photons routed out of the circuit keep their origin: mode m goes to
// kLostModeOffset + m. Lost kets pass through every later element.
inline constexpr Mode kLostModeOffset = 1000;

constexpr Mode lost_mode(Mode from) { return static_cast<Mode>(kLostModeOffset + from); }
constexpr bool is_lost(Mode m) { return m >= kLostModeOffset; }

constexpr Polarization flipped(Polarization p) {
  return p == Polarization::R ? Polarization::L : Polarization::R;
}
constexpr Propagation reversed(Propagation d) {
  return d == Propagation::AlongZ ? Propagation::AgainstZ : Propagation::AlongZ;
}

struct PhotonLabel {
  Polarization pol = Polarization::R;
  Propagation dir = kFreeSpace;
  Mode mode = 0;

  auto operator<=>(const PhotonLabel&) const = default;
};

struct BasisKet {
  std::vector<PhotonLabel> photons;
  std::optional<SpinBasis> spin;

  auto operator<=>(const BasisKet&) const = default;
};

// Subsystem structure shared by every ket of a state.
struct Layout {
  std::size_t photons = 0;
  bool spin = false;

  auto operator<=>(const Layout&) const = default;
};

class StateVector {
 public:
  using Amplitudes = std::map<BasisKet, Complex>;

  StateVector() = default;
  explicit StateVector(Layout layout) : layout_(layout) {}

  static StateVector basis(BasisKet ket, Complex amplitude = 1.0);
  static StateVector spin(SpinBasis s);
  // alpha |R> + beta |L> for one photon at `mode`.
  static StateVector photon(Complex alpha, Complex beta, Mode mode = 0,
                            Propagation dir = kFreeSpace);

  const Layout& layout() const noexcept { return layout_; }
  const Amplitudes& amplitudes() const noexcept { return amps_; }
  std::size_t size() const noexcept { return amps_.size(); }
  bool empty() const noexcept { return amps_.empty(); }

  Complex amplitude(const BasisKet& ket) const;
  double norm_squared() const;

  // Accumulates into the amplitude of `ket`. Throws StructuralError when the
  // ket does not match the layout.
  void add(const BasisKet& ket, Complex amplitude);

  StateVector pruned(double threshold = kPruneThreshold) const;
  StateVector scaled(Complex factor) const;
  // Throws DegenerateStateError on a zero vector.
  StateVector normalized() const;

  // Keeps only kets satisfying `keep`.
  StateVector filtered(const std::function<bool(const BasisKet&)>& keep) const;

  StateVector& operator+=(const StateVector& other);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator*(Complex c, const StateVector& s) { return s.scaled(c); }

 private:
  Layout layout_;
  Amplitudes amps_;
};

StateVector tensor(const StateVector& a, const StateVector& b);

// Conjugate-linear in `a`.
Complex inner_product(const StateVector& a, const StateVector& b);

// |<realistic|ideal>|^2. With `normalize`, the realistic state is scaled to
// unit norm first.
double fidelity(const StateVector& realistic, const StateVector& ideal, bool normalize = true);

// Fidelity that also quotients out norm: |<a|b>|^2 / (|a|^2 |b|^2).
double overlap_fidelity(const StateVector& a, const StateVector& b);

// Largest amplitude difference after removing the best global phase and
// requiring equal norms. Zero iff a and b agree up to a phase.
double phase_distance(const StateVector& a, const StateVector& b);

// Linear maps on one site. Each returns the image of a basis label as a list
// of (label, amplitude) pairs, or nullopt when the map is undefined there.
template <class Label>
using Image = std::vector<std::pair<Label, Complex>>;

struct PhotonSpin {
  PhotonLabel photon;
  SpinBasis spin = SpinBasis::Up;

  auto operator<=>(const PhotonSpin&) const = default;
};

using PhotonMap = std::function<std::optional<Image<PhotonLabel>>(const PhotonLabel&)>;
using PhotonSpinMap = std::function<std::optional<Image<PhotonSpin>>(const PhotonSpin&)>;
using SpinMap = std::function<std::optional<Image<SpinBasis>>(SpinBasis)>;

StateVector apply_photon_map(const StateVector& state, std::size_t photon, const PhotonMap& map);
StateVector apply_photon_spin_map(const StateVector& state, std::size_t photon,
                                  const PhotonSpinMap& map);
StateVector apply_spin_map(const StateVector& state, const SpinMap& map);

struct SpinBranch {
  SpinBasis outcome = SpinBasis::Up;
  double probability = 0.0;
  StateVector state;  // photons only, unit norm (empty when probability is 0)
};

// Projective measurement in {Up, Down}. Always returns both branches, Up
// first. Throws DegenerateStateError on a zero state.
std::vector<SpinBranch> measure_spin(const StateVector& state);

// Reduced 2x2 density matrix of one photon's polarization, tracing out every
// other label (including modes and direction of the kept photon).
struct PolarizationDensity {
  Complex rr, rl, lr, ll;
  double purity() const;
};
PolarizationDensity reduced_polarization(const StateVector& state, std::size_t photon);

// Plain-text form: one line per ket, `pol/dir/mode,... | spin : re,im`, in
// BasisKet order. pol is R|L, dir is u|d, spin is u|d or '-' when absent.
std::string serialize(const StateVector& state);
StateVector parse_state(std::string_view text);

std::string to_string(Polarization p);
std::string to_string(Propagation d);
std::string to_string(SpinBasis s);

}  // namespace qdc
