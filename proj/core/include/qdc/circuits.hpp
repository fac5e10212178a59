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

// Step-by-step execution of the photonic CNOT and Toffoli circuits mediated
// by one QD spin, with brute-force ideal-gate oracles for comparison.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qdc/cavity.hpp"
#include "qdc/hilbert.hpp"

namespace qdc {

enum class Gate { Cnot, Toffoli };

std::string to_string(Gate gate);

// alpha |R> + beta |L>.
struct QubitState {
  Complex alpha{1.0};
  Complex beta{0.0};

  static QubitState r() { return {1.0, 0.0}; }
  static QubitState l() { return {0.0, 1.0}; }
  static QubitState plus();   // (|R> + |L>)/sqrt2
  static QubitState minus();  // (|R> - |L>)/sqrt2

  // Throws PreconditionError unless |alpha|^2 + |beta|^2 = 1 within 1e-9.
  void validate() const;
};

struct IdealScattering {};
struct RealisticScattering {
  ScatterCoeffs coeffs;
};
using GateMode = std::variant<IdealScattering, RealisticScattering>;

GateMode realistic(const CavityParams& params);
GateMode realistic(const ScatterCoeffs& coeffs);

struct GateBranch {
  SpinBasis outcome = SpinBasis::Up;
  double probability = 0.0;
  StateVector photons;  // after feed-forward, unit norm
};

struct TraceEntry {
  std::string name;
  StateVector state;
};

struct GateResult {
  std::vector<GateBranch> branches;  // Up then Down
  // Squared norm of the amplitude that reaches the output ports.
  double survival = 0.0;
  // State just before the spin measurement (after the last H_e).
  StateVector pre_measurement;
  // Named intermediate states, first entry "input", in execution order.
  std::vector<TraceEntry> trace;

  // Throws std::out_of_range for an unknown name.
  const StateVector& traced(std::string_view name) const;
};

// Output spatial modes of each photon: CNOT (6, 9), Toffoli (6, 17, 21).
std::vector<Mode> output_modes(Gate gate);

/// Deterministic two-photon CNOT. The electron starts in |down>; any other
/// initial spin is a precondition error.
GateResult cnot(const QubitState& control, const QubitState& target, const GateMode& mode,
                SpinBasis initial_spin = SpinBasis::Down);

/// Deterministic three-photon Toffoli (target flipped iff both controls are
/// |L>). The electron starts in |up>.
GateResult toffoli(const QubitState& c1, const QubitState& c2, const QubitState& target,
                   const GateMode& mode, SpinBasis initial_spin = SpinBasis::Up);

// Dispatch on gate; inputs are ordered controls first, target last.
GateResult run_gate(Gate gate, std::span<const QubitState> inputs, const GateMode& mode);

// Permutation matrix on the polarization basis. Photon 0 is the most
// significant bit; |R> = 0, |L> = 1. The target flips iff all controls are |L>.
Eigen::MatrixXcd ideal_oracle(Gate gate);

// Oracle applied to the product input, as a photon-only state on the output
// modes.
StateVector oracle_output(Gate gate, std::span<const QubitState> inputs);

enum class FidelityConvention {
  PerBranchAveraged,  // sum over outcomes of p(outcome) * F(branch)
  PreMeasurement,     // F of the normalized state before measurement
  // |<ideal|real>|^2 before measurement without renormalizing the realistic
  // state, so lost and wrong-path amplitude both count against it.
  UnnormalizedOverlap,
};

double simulated_fidelity(Gate gate, std::span<const QubitState> inputs, const GateMode& mode,
                          FidelityConvention convention);
double simulated_fidelity(Gate gate, std::span<const QubitState> inputs, const CavityParams& params,
                          FidelityConvention convention);

// Survival probability of the realistic run (1 in ideal mode).
double simulated_efficiency(Gate gate, std::span<const QubitState> inputs, const GateMode& mode);
double simulated_efficiency(Gate gate, std::span<const QubitState> inputs, const CavityParams& params);

}  // namespace qdc
