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

// Linear-optical and spin-control elements. Everything here except cavity
// scattering is unitary on its domain.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qdc/hilbert.hpp"

namespace qdc {

/// Finite label-rewrite table for beam splitters, port merges and cavity
/// entry/exit. An entry matches (mode, polarization) and optionally the
/// direction; it rewrites the mode, optionally sets the direction, and
/// multiplies by +1 or -1. Polarization is never changed.
///
/// Labels whose mode is not an input mode of any entry pass through
/// untouched. A label at an input mode with no matching entry is an
/// incomplete-map error.
class RoutingRule {
 public:
  struct Entry {
    Mode in_mode = 0;
    Polarization pol = Polarization::R;
    std::optional<Propagation> in_dir;   // nullopt matches either direction
    Mode out_mode = 0;
    std::optional<Propagation> out_dir;  // nullopt keeps the direction
    int sign = 1;
  };

  RoutingRule() = default;

  // Throws PreconditionError if the entry overlaps an existing one, breaks
  // injectivity, or has a sign other than +/-1.
  RoutingRule& route(const Entry& entry);

  // Shorthand for the common cases.
  RoutingRule& route(Mode in_mode, Polarization pol, Mode out_mode,
                     std::optional<Propagation> out_dir = std::nullopt, int sign = 1);
  RoutingRule& route(Mode in_mode, Polarization pol, Propagation in_dir, Mode out_mode,
                     std::optional<Propagation> out_dir = std::nullopt, int sign = 1);
  // Sends (in_mode, pol) out of the circuit to lost_mode(in_mode).
  RoutingRule& discard(Mode in_mode, Polarization pol);

  const std::vector<Entry>& entries() const noexcept { return entries_; }

  // Image of a single label, or nullopt if the label is at an input mode but
  // unmatched.
  std::optional<PhotonLabel> apply(const PhotonLabel& in, int* sign = nullptr) const;

  // Exact inverse on the concrete labels this rule produces.
  RoutingRule inverse() const;

  PhotonMap as_map() const;

 private:
  // Concrete (fully specified) input label -> output label and sign.
  std::map<PhotonLabel, std::pair<PhotonLabel, int>> table_;
  std::vector<Entry> entries_;
};

StateVector pbs(const StateVector& state, std::size_t photon, const RoutingRule& rule);

// Half-wave plate at 22.5 degrees: R -> (R+L)/sqrt2, L -> (R-L)/sqrt2. With
// `at`, acts only on the photon while it occupies that mode.
StateVector hadamard_p(const StateVector& state, std::size_t photon,
                       std::optional<Mode> at = std::nullopt);

// pi/2 pulse on the electron: up -> (up+down)/sqrt2, down -> (up-down)/sqrt2.
StateVector hadamard_e(const StateVector& state);

// pi phase shifter on `mode`.
StateVector phase_pi(const StateVector& state, std::size_t photon, Mode mode);

// Fiber delay: sequencing only, amplitudes untouched.
StateVector delay_line(const StateVector& state);

/// Timed optical switch. Each epoch is one pass of a photon through the
/// switch and maps input modes to output modes; polarization and direction
/// are untouched.
struct SwitchSchedule {
  struct Epoch {
    std::map<Mode, Mode> routes;
  };
  std::vector<Epoch> epochs;
};

// `pass` is 1-based. Throws ScheduleExhaustedError past the last epoch.
StateVector switch_route(const StateVector& state, std::size_t photon,
                         const SwitchSchedule& schedule, std::size_t pass);

enum class Pauli { Identity, Z, MinusZ, X };

StateVector apply_pauli(const StateVector& state, std::size_t photon, Pauli pauli);

// Classical correction table: outcome -> Paulis to apply. Outcomes with no
// entry get the identity.
using FeedForwardRule = std::map<SpinBasis, std::vector<std::pair<std::size_t, Pauli>>>;

StateVector feed_forward(const StateVector& state, SpinBasis outcome, const FeedForwardRule& rule);

}  // namespace qdc
