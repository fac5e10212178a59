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

#include <gtest/gtest.h>

#include <cmath>

#include "qdc/elements.hpp"
#include "qdc/error.hpp"
#include "test_support.hpp"

namespace qdc {
namespace {

using testing::ket;
using testing::label;
constexpr auto R = Polarization::R;
constexpr auto L = Polarization::L;
constexpr auto Up = SpinBasis::Up;
constexpr auto Down = SpinBasis::Down;
constexpr auto along = Propagation::AlongZ;
constexpr auto against = Propagation::AgainstZ;
const double kHalfRoot = 1.0 / std::sqrt(2.0);

// Input splitter of the CNOT control arm.
RoutingRule control_splitter() {
  RoutingRule rule;
  rule.route(0, R, along, 2, against);
  rule.route(0, L, 1);
  return rule;
}

TEST(Pbs, TransmitsRightIntoCavityArm) {
  const auto out = pbs(StateVector::photon(1.0, 0.0, 0), 0, control_splitter());
  EXPECT_NEAR(std::abs(out.amplitude(ket({label(R, against, 2)})) - 1.0), 0.0, 1e-15);
}

TEST(Pbs, ReflectsLeftPastCavity) {
  const auto out = pbs(StateVector::photon(0.0, 1.0, 0), 0, control_splitter());
  EXPECT_NEAR(std::abs(out.amplitude(ket({label(L, along, 1)})) - 1.0), 0.0, 1e-15);
}

TEST(Pbs, MergeKeepsDirection) {
  RoutingRule merge;
  merge.route(3, R, against, 5);
  merge.route(4, L, along, 5);
  const auto out = pbs(StateVector::photon(1.0, 0.0, 3, against), 0, merge);
  EXPECT_NEAR(std::abs(out.amplitude(ket({label(R, against, 5)})) - 1.0), 0.0, 1e-15);
}

TEST(Pbs, UnmatchedLabelAtInputModeThrows) {
  RoutingRule merge;
  merge.route(3, R, against, 5);
  EXPECT_THROW(pbs(StateVector::photon(1.0, 0.0, 3, along), 0, merge), IncompleteMapError);
  // Other modes pass through untouched.
  const auto other = StateVector::photon(0.0, 1.0, 9);
  EXPECT_LT(testing::max_difference(pbs(other, 0, merge), other), 1e-15);
}

TEST(Pbs, InverseUndoesRouting) {
  RoutingRule rule = control_splitter();
  rule.route(0, R, against, 2, along);
  rule.route(7, R, against, 8, along, -1);
  rule.discard(7, L);
  const RoutingRule inv = rule.inverse();
  for (int i = 0; i < 50; ++i) {
    const auto s = testing::random_state(testing::rng(), 2, true, 6, 1);
    EXPECT_LT(testing::max_difference(pbs(pbs(s, 1, rule), 1, inv), s), 1e-12);
  }
}

TEST(RoutingRule, RejectsOverlapNonInjectiveAndBadSign) {
  RoutingRule rule;
  rule.route(0, R, 2);
  EXPECT_THROW(rule.route(0, R, against, 3), PreconditionError);
  EXPECT_THROW(rule.route(1, R, 2), PreconditionError);
  EXPECT_THROW(rule.route(RoutingRule::Entry{5, L, std::nullopt, 6, std::nullopt, 2}), PreconditionError);
}

TEST(RoutingRule, DiscardSendsToLossSink) {
  RoutingRule rule;
  rule.discard(5, L);
  const auto out = rule.apply(label(L, along, 5));
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->mode, lost_mode(5));
  EXPECT_TRUE(is_lost(out->mode));
}

TEST(HadamardP, DefinedRules) {
  const auto r = hadamard_p(StateVector::photon(1.0, 0.0), 0);
  EXPECT_LT(testing::max_difference(r, StateVector::photon(kHalfRoot, kHalfRoot)), 1e-15);
  const auto l = hadamard_p(StateVector::photon(0.0, 1.0), 0);
  EXPECT_LT(testing::max_difference(l, StateVector::photon(kHalfRoot, -kHalfRoot)), 1e-15);
}

TEST(HadamardP, OnFirstPhotonOfProduct) {
  const auto in = tensor(tensor(StateVector::photon(1.0, 0.0), StateVector::photon(1.0, 0.0)), StateVector::spin(Down));
  const auto out = hadamard_p(in, 0);
  EXPECT_NEAR(out.amplitude(ket({label(R, along), label(R, along)}, Down)).real(), kHalfRoot, 1e-15);
  EXPECT_NEAR(out.amplitude(ket({label(L, along), label(R, along)}, Down)).real(), kHalfRoot, 1e-15);
  EXPECT_EQ(out.size(), 2u);
}

TEST(HadamardP, RestrictedToMode) {
  const auto s = StateVector::photon(1.0, 0.0, 4);
  EXPECT_LT(testing::max_difference(hadamard_p(s, 0, Mode{3}), s), 1e-15);
  EXPECT_EQ(hadamard_p(s, 0, Mode{4}).size(), 2u);
}

TEST(HadamardE, DefinedRules) {
  const auto up = hadamard_e(StateVector::spin(Up));
  EXPECT_NEAR(up.amplitude(ket({}, Up)).real(), kHalfRoot, 1e-15);
  EXPECT_NEAR(up.amplitude(ket({}, Down)).real(), kHalfRoot, 1e-15);
  const auto down = hadamard_e(StateVector::spin(Down));
  EXPECT_NEAR(down.amplitude(ket({}, Up)).real(), kHalfRoot, 1e-15);
  EXPECT_NEAR(down.amplitude(ket({}, Down)).real(), -kHalfRoot, 1e-15);
}

TEST(Involutions, HadamardsAndPhaseTwiceAreIdentity) {
  for (int i = 0; i < 50; ++i) {
    const auto s = testing::random_state(testing::rng(), 2, true);
    EXPECT_LT(testing::max_difference(hadamard_p(hadamard_p(s, 1), 1), s), 1e-12);
    EXPECT_LT(testing::max_difference(hadamard_e(hadamard_e(s)), s), 1e-12);
    EXPECT_LT(testing::max_difference(phase_pi(phase_pi(s, 0, 1), 0, 1), s), 1e-12);
  }
}

TEST(PhasePi, FlipsSignOnlyAtMode) {
  const auto at19 = StateVector::photon(1.0, 0.0, 19, against);
  EXPECT_NEAR(phase_pi(at19, 0, 19).amplitude(ket({label(R, against, 19)})).real(), -1.0, 1e-15);
  EXPECT_LT(testing::max_difference(phase_pi(at19, 0, 20), at19), 1e-15);
}

TEST(DelayLine, ChangesNoAmplitude) {
  const auto s = testing::random_state(testing::rng(), 3, true);
  EXPECT_EQ(delay_line(s).amplitudes(), s.amplitudes());
}

SwitchSchedule parking_switch() {
  SwitchSchedule s;
  s.epochs.push_back({{{11, 12}}});
  s.epochs.push_back({{{11, 14}}});
  s.epochs.push_back({{{11, 12}}});
  return s;
}

TEST(Switch, EpochsInOrder) {
  const auto schedule = parking_switch();
  const auto in = StateVector::photon(0.0, 1.0, 11, along);
  EXPECT_EQ(switch_route(in, 0, schedule, 1).amplitudes().begin()->first.photons[0], label(L, along, 12));
  EXPECT_EQ(switch_route(in, 0, schedule, 2).amplitudes().begin()->first.photons[0], label(L, along, 14));
  EXPECT_EQ(switch_route(in, 0, schedule, 3).amplitudes().begin()->first.photons[0], label(L, along, 12));
}

TEST(Switch, ExhaustedScheduleThrows) {
  const auto in = StateVector::photon(1.0, 0.0, 11);
  EXPECT_THROW(switch_route(in, 0, parking_switch(), 4), ScheduleExhaustedError);
  EXPECT_THROW(switch_route(in, 0, parking_switch(), 0), ScheduleExhaustedError);
}

TEST(Pauli, Actions) {
  const auto plus = StateVector::photon(kHalfRoot, kHalfRoot);
  EXPECT_LT(testing::max_difference(apply_pauli(plus, 0, Pauli::Z), StateVector::photon(kHalfRoot, -kHalfRoot)),
            1e-15);
  EXPECT_LT(testing::max_difference(apply_pauli(StateVector::photon(0.0, 1.0), 0, Pauli::X),
                                    StateVector::photon(1.0, 0.0)),
            1e-15);
  EXPECT_LT(testing::max_difference(apply_pauli(StateVector::photon(1.0, 0.0), 0, Pauli::MinusZ),
                                    StateVector::photon(-1.0, 0.0)),
            1e-15);
}

TEST(FeedForward, AppliesListedPaulisAndDefaultsToIdentity) {
  const FeedForwardRule rule{{Up, {{0, Pauli::MinusZ}, {1, Pauli::X}}}};
  const auto in = tensor(StateVector::photon(1.0, 0.0), StateVector::photon(1.0, 0.0));
  const auto out = feed_forward(in, Up, rule);
  EXPECT_NEAR(out.amplitude(ket({label(R, along), label(L, along)})).real(), -1.0, 1e-15);
  EXPECT_EQ(feed_forward(in, Down, rule).amplitudes(), in.amplitudes());
}

TEST(Unitarity, IdealElementsPreserveNorm) {
  RoutingRule rule = control_splitter();
  rule.route(0, R, against, 2, along);
  rule.route(1, R, 3);
  rule.route(1, L, 4, std::nullopt, -1);
  rule.route(2, R, 5);
  rule.route(2, L, 6);
  for (int i = 0; i < 100; ++i) {
    const auto s = testing::random_state(testing::rng(), 2, true, 8);
    EXPECT_NEAR(pbs(s, 0, rule).norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(hadamard_p(s, 1).norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(hadamard_e(s).norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(phase_pi(s, 0, 2).norm_squared(), 1.0, 1e-12);
    for (Pauli p : {Pauli::Identity, Pauli::Z, Pauli::MinusZ, Pauli::X}) {
      EXPECT_NEAR(apply_pauli(s, 1, p).norm_squared(), 1.0, 1e-12);
    }
  }
}

}  // namespace
}  // namespace qdc
