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

#include "qdc/circuits.hpp"

#include <cmath>
#include <stdexcept>

#include "qdc/elements.hpp"
#include "qdc/error.hpp"

namespace qdc {
namespace {

constexpr auto kUp = Propagation::AlongZ;
constexpr auto kDown = Propagation::AgainstZ;
constexpr auto R = Polarization::R;
constexpr auto L = Polarization::L;

// Every cavity pass routes the photon into this mode, scatters, and routes it
// out again. Only one photon is ever inside.
constexpr Mode kCavity = 999;
constexpr Mode kInput = 0;

// Entry ports assign the direction from the polarization: R travels down, L
// up. Exits are keyed on the scattered (polarization, direction).
RoutingRule entry_rule(std::initializer_list<std::tuple<Mode, Polarization, Propagation>> ports) {
  RoutingRule rule;
  for (const auto& [mode, pol, in_dir] : ports) {
    rule.route(mode, pol, in_dir, kCavity, pol == R ? kDown : kUp);
  }
  return rule;
}

RoutingRule exit_rule(Mode r_down, Mode l_up, std::optional<Propagation> out_dir) {
  RoutingRule rule;
  rule.route(kCavity, R, kDown, r_down, out_dir);
  rule.route(kCavity, L, kUp, l_up, out_dir);
  return rule;
}

class Runner {
 public:
  Runner(StateVector initial, const GateMode& mode) : state_(std::move(initial)), mode_(mode) {}

  void route(std::size_t photon, const RoutingRule& rule) { state_ = pbs(state_, photon, rule); }
  void hp(std::size_t photon, Mode at) { state_ = hadamard_p(state_, photon, at); }
  void he() { state_ = hadamard_e(state_); }
  void phase(std::size_t photon, Mode at) { state_ = phase_pi(state_, photon, at); }
  void delay() { state_ = delay_line(state_); }
  void switch_pass(std::size_t photon, const SwitchSchedule& s, std::size_t pass) {
    state_ = switch_route(state_, photon, s, pass);
  }

  void cavity(std::size_t photon, const RoutingRule& entry, const RoutingRule& exit) {
    route(photon, entry);
    state_ = apply_photon_spin_map(state_, photon, [this](const PhotonSpin& in) {
      if (in.photon.mode != kCavity) return std::optional<Image<PhotonSpin>>(Image<PhotonSpin>{{in, 1.0}});
      return scatter_(in);
    });
    route(photon, exit);
  }

  void record(std::string name) { trace_.push_back({std::move(name), state_}); }

  GateResult finish(const std::vector<Mode>& outputs, const FeedForwardRule& corrections) {
    he();
    GateResult result;
    result.pre_measurement = state_;
    check_outputs(outputs);

    const auto kept = state_.filtered([](const BasisKet& k) {
      for (const auto& p : k.photons) {
        if (is_lost(p.mode)) return false;
      }
      return true;
    });
    result.survival = kept.norm_squared();
    if (result.survival <= 0.0) throw DegenerateStateError("no amplitude reaches the output ports");

    for (auto& branch : measure_spin(state_)) {
      GateBranch out{branch.outcome, branch.probability, branch.state};
      if (branch.probability > 0.0) out.photons = feed_forward(branch.state, branch.outcome, corrections);
      result.branches.push_back(std::move(out));
    }
    result.trace = std::move(trace_);
    return result;
  }

  const StateVector& state() const { return state_; }

 private:
  std::optional<Image<PhotonSpin>> scatter_(const PhotonSpin& in) const {
    if (std::holds_alternative<IdealScattering>(mode_)) return ideal_(in);
    return realistic_(in);
  }

  // Every surviving photon must sit on its output port in free space.
  void check_outputs(const std::vector<Mode>& outputs) const {
    for (const auto& [ket, amp] : state_.amplitudes()) {
      for (std::size_t i = 0; i < ket.photons.size(); ++i) {
        const auto& p = ket.photons[i];
        if (is_lost(p.mode)) continue;
        if (p.mode != outputs[i] || p.dir != kFreeSpace) {
          throw InvariantViolation("photon " + std::to_string(i) + " ends at mode " +
                                   std::to_string(p.mode) + " instead of output " +
                                   std::to_string(outputs[i]));
        }
      }
    }
  }

  StateVector state_;
  GateMode mode_;
  PhotonSpinMap ideal_ = ideal_scatter();
  PhotonSpinMap realistic_ = std::holds_alternative<RealisticScattering>(mode_)
                                 ? realistic_scatter(std::get<RealisticScattering>(mode_).coeffs)
                                 : PhotonSpinMap{};
  std::vector<TraceEntry> trace_;
};

StateVector input_photon(const QubitState& q) {
  q.validate();
  return StateVector::photon(q.alpha, q.beta, kInput, kFreeSpace);
}

// Control-photon stage shared by both gates (modes 0..6): PBS1 split, H_p + H_e
// around one cavity pass on the R arm, PBS2 merge, H_p + H_e, PBS3 merge with
// the delayed L arm.
void control_split(Runner& run, std::size_t photon) {
  run.route(photon, RoutingRule{}.route(kInput, R, kFreeSpace, 2, kDown).route(kInput, L, kFreeSpace, 1));
}

void control_scatter(Runner& run, std::size_t photon) {
  run.hp(photon, 2);
  run.he();
  run.cavity(photon, entry_rule({{2, R, kDown}, {2, L, kDown}}), exit_rule(3, 4, std::nullopt));
}

void control_merge(Runner& run, std::size_t photon) {
  // PBS2: both cavity outputs join mode 5 in free space.
  run.route(photon, RoutingRule{}.route(3, R, kDown, 5, kFreeSpace).route(4, L, kUp, 5, kFreeSpace));
  run.hp(photon, 5);
  run.he();
  run.delay();
  // PBS3 passes R from 5 and L from 1 to the output; the other polarizations
  // leave through the unused port.
  run.route(photon, RoutingRule{}
                        .route(5, R, kFreeSpace, 6)
                        .route(1, L, kFreeSpace, 6)
                        .discard(5, L)
                        .discard(1, R));
}

const SwitchSchedule& s1_schedule() {
  static const SwitchSchedule s{{{{{11, 12}}}, {{{11, 14}}}, {{{11, 12}}}}};
  return s;
}

// S2 only has one explicit rewrite (14 -> 9). Its other passes lead mode 13
// into the cavity port.
const SwitchSchedule& s2_schedule() {
  static const SwitchSchedule s{{{{{13, 13}}}, {{{14, 9}}}, {{{13, 13}}}}};
  return s;
}

}  // namespace

std::string to_string(Gate gate) { return gate == Gate::Cnot ? "cnot" : "toffoli"; }

QubitState QubitState::plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, h};
}

QubitState QubitState::minus() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, -h};
}

void QubitState::validate() const {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw PreconditionError("qubit state is not normalized (|alpha|^2+|beta|^2 = " + std::to_string(n) + ")");
  }
}

GateMode realistic(const CavityParams& params) { return RealisticScattering{coefficients(params)}; }
GateMode realistic(const ScatterCoeffs& coeffs) { return RealisticScattering{coeffs}; }

const StateVector& GateResult::traced(std::string_view name) const {
  for (const auto& e : trace) {
    if (e.name == name) return e.state;
  }
  throw std::out_of_range("no trace entry named " + std::string(name));
}

std::vector<Mode> output_modes(Gate gate) {
  if (gate == Gate::Cnot) return {6, 9};
  return {6, 17, 21};
}

GateResult cnot(const QubitState& control, const QubitState& target, const GateMode& mode,
                SpinBasis initial_spin) {
  if (initial_spin != SpinBasis::Down) throw PreconditionError("CNOT requires the spin to start in |down>");
  constexpr std::size_t c = 0;
  constexpr std::size_t t = 1;

  Runner run(tensor(tensor(input_photon(control), input_photon(target)), StateVector::spin(initial_spin)),
             mode);
  run.record("input");

  control_split(run, c);
  run.record("control_split");
  control_scatter(run, c);
  run.record("control_scattered");
  control_merge(run, c);
  run.record("control_merged");

  // PBS4 sends R down into one side of the cavity and L up into the other;
  // both outputs are collected on mode 9.
  run.route(t, RoutingRule{}.route(kInput, R, kFreeSpace, 8, kDown).route(kInput, L, kFreeSpace, 7, kUp));
  run.cavity(t, entry_rule({{8, R, kDown}, {7, L, kUp}}), exit_rule(9, 9, kFreeSpace));
  run.record("target_scattered");

  return run.finish(output_modes(Gate::Cnot), {{SpinBasis::Down, {{c, Pauli::Z}}}});
}

GateResult toffoli(const QubitState& c1, const QubitState& c2, const QubitState& target,
                   const GateMode& mode, SpinBasis initial_spin) {
  if (initial_spin != SpinBasis::Up) throw PreconditionError("Toffoli requires the spin to start in |up>");
  constexpr std::size_t a = 0;  // first control
  constexpr std::size_t b = 1;  // second control
  constexpr std::size_t t = 2;

  Runner run(tensor(tensor(tensor(input_photon(c1), input_photon(c2)), input_photon(target)),
                    StateVector::spin(initial_spin)),
             mode);
  run.record("input");

  // First control: same stage as the CNOT control.
  control_split(run, a);
  control_scatter(run, a);
  control_merge(run, a);
  run.record("c1_done");

  // Second control, first pass: only the R arm meets the cavity.
  run.route(b, RoutingRule{}.route(kInput, R, kFreeSpace, 7, kDown).route(kInput, L, kFreeSpace, 8));
  run.cavity(b, entry_rule({{7, R, kDown}}), exit_rule(11, 11, std::nullopt));
  run.record("c2_first_scatter");

  // S1 -> 12, HWP3 (free space) -> 13, H_e, S2 back into the cavity.
  run.switch_pass(b, s1_schedule(), 1);
  run.route(b, RoutingRule{}.route(12, R, kDown, 13, kFreeSpace).route(12, L, kUp, 13, kFreeSpace));
  run.hp(b, 13);
  run.he();
  run.switch_pass(b, s2_schedule(), 1);
  const auto hwp3_entry = entry_rule({{13, R, kFreeSpace}, {13, L, kFreeSpace}});
  run.cavity(b, hwp3_entry, exit_rule(11, 11, std::nullopt));
  run.record("c2_second_scatter");
  run.he();
  run.record("c2_spin_rotated");

  // Park the second control: S1 -> 14, S2 -> 9, PBS5 splits onto 10 / 15.
  run.switch_pass(b, s1_schedule(), 2);
  run.switch_pass(b, s2_schedule(), 2);
  run.route(b, RoutingRule{}.route(9, R, kDown, 10).route(9, L, kUp, 15));
  run.delay();

  // Target loop: PBS7 -> 18 (R) / 20 (L); the L arm crosses P_pi to 19. The
  // cavity reflects back toward the port it came from and transmits across;
  // photons leaving on 19 cross P_pi again to 20, and PBS7 merges 18 and 20
  // onto 21.
  run.route(t, RoutingRule{}.route(kInput, R, kFreeSpace, 18, kDown).route(kInput, L, kFreeSpace, 20, kUp));
  run.phase(t, 20);
  run.route(t, RoutingRule{}.route(20, L, kUp, 19));
  run.cavity(t, entry_rule({{18, R, kDown}, {19, L, kUp}}), exit_rule(19, 18, std::nullopt));
  run.phase(t, 19);
  run.route(t, RoutingRule{}.route(19, R, kDown, 20));
  run.route(t, RoutingRule{}
                   .route(18, L, kUp, 21, kFreeSpace)
                   .route(20, R, kDown, 21, kFreeSpace)
                   .discard(18, R)
                   .discard(20, L));
  run.he();

  // Second control re-enters from both sides.
  run.cavity(b, entry_rule({{10, R, kDown}, {15, L, kUp}}), exit_rule(11, 11, std::nullopt));
  run.record("c2_reinjected");

  run.switch_pass(b, s1_schedule(), 3);
  run.route(b, RoutingRule{}.route(12, R, kDown, 13, kFreeSpace).route(12, L, kUp, 13, kFreeSpace));
  run.hp(b, 13);
  run.he();
  run.switch_pass(b, s2_schedule(), 3);
  run.cavity(b, hwp3_entry, exit_rule(16, 16, std::nullopt));
  run.record("c2_final_scatter");

  // PBS6 merges R from 16 with the untouched L arm on 8.
  run.route(b, RoutingRule{}
                   .route(16, R, kDown, 17, kFreeSpace)
                   .route(8, L, kFreeSpace, 17)
                   .discard(16, L)
                   .discard(8, R));
  run.record("outputs_merged");

  return run.finish(output_modes(Gate::Toffoli),
                    {{SpinBasis::Up, {{a, Pauli::MinusZ}, {t, Pauli::X}}}, {SpinBasis::Down, {{t, Pauli::X}}}});
}

GateResult run_gate(Gate gate, std::span<const QubitState> inputs, const GateMode& mode) {
  const std::size_t want = gate == Gate::Cnot ? 2 : 3;
  if (inputs.size() != want) {
    throw PreconditionError(to_string(gate) + " takes " + std::to_string(want) + " input qubits");
  }
  if (gate == Gate::Cnot) return cnot(inputs[0], inputs[1], mode);
  return toffoli(inputs[0], inputs[1], inputs[2], mode);
}

Eigen::MatrixXcd ideal_oracle(Gate gate) {
  const int n = gate == Gate::Cnot ? 2 : 3;
  const int dim = 1 << n;
  const int controls = (dim - 1) & ~1;  // every bit except the target (LSB)
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int in = 0; in < dim; ++in) {
    const int out = (in & controls) == controls ? in ^ 1 : in;
    m(out, in) = 1.0;
  }
  return m;
}

StateVector oracle_output(Gate gate, std::span<const QubitState> inputs) {
  const auto modes = output_modes(gate);
  if (inputs.size() != modes.size()) throw PreconditionError("wrong number of input qubits for oracle");
  const int n = static_cast<int>(modes.size());
  const int dim = 1 << n;

  Eigen::VectorXcd product(dim);
  for (int idx = 0; idx < dim; ++idx) {
    Complex amp = 1.0;
    for (int q = 0; q < n; ++q) {
      const bool is_l = (idx >> (n - 1 - q)) & 1;
      amp *= is_l ? inputs[q].beta : inputs[q].alpha;
    }
    product(idx) = amp;
  }
  const Eigen::VectorXcd out = ideal_oracle(gate) * product;

  StateVector state(Layout{static_cast<std::size_t>(n), false});
  for (int idx = 0; idx < dim; ++idx) {
    BasisKet ket;
    for (int q = 0; q < n; ++q) {
      const bool is_l = (idx >> (n - 1 - q)) & 1;
      ket.photons.push_back(PhotonLabel{is_l ? L : R, kFreeSpace, modes[q]});
    }
    state.add(ket, out(idx));
  }
  return state.pruned();
}

double simulated_fidelity(Gate gate, std::span<const QubitState> inputs, const GateMode& mode,
                          FidelityConvention convention) {
  const GateResult real = run_gate(gate, inputs, mode);
  const GateResult ideal = run_gate(gate, inputs, IdealScattering{});
  if (convention == FidelityConvention::PreMeasurement) {
    return fidelity(real.pre_measurement, ideal.pre_measurement, true);
  }
  if (convention == FidelityConvention::UnnormalizedOverlap) {
    return fidelity(real.pre_measurement, ideal.pre_measurement, false);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < real.branches.size(); ++i) {
    const auto& rb = real.branches[i];
    if (rb.probability <= 0.0) continue;
    const auto& ib = ideal.branches[i];
    // Both ideal branches coincide; fall back to the other when this
    // outcome never occurs ideally.
    const auto& ref = ib.probability > 0.0 ? ib.photons : ideal.branches[1 - i].photons;
    total += rb.probability * fidelity(rb.photons, ref, true);
  }
  return total;
}

double simulated_fidelity(Gate gate, std::span<const QubitState> inputs, const CavityParams& params,
                          FidelityConvention convention) {
  return simulated_fidelity(gate, inputs, realistic(params), convention);
}

double simulated_efficiency(Gate gate, std::span<const QubitState> inputs, const GateMode& mode) {
  return run_gate(gate, inputs, mode).survival;
}

double simulated_efficiency(Gate gate, std::span<const QubitState> inputs, const CavityParams& params) {
  return simulated_efficiency(gate, inputs, realistic(params));
}

}  // namespace qdc
