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

#include "qdc/elements.hpp"

#include <cmath>
#include <set>

#include "qdc/error.hpp"

namespace qdc {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<Propagation> directions(std::optional<Propagation> d) {
  if (d) return {*d};
  return {Propagation::AlongZ, Propagation::AgainstZ};
}

}  // namespace

RoutingRule& RoutingRule::route(const Entry& entry) {
  if (entry.sign != 1 && entry.sign != -1) throw PreconditionError("routing sign must be +/-1");

  std::set<PhotonLabel> images;
  for (const auto& [in, out] : table_) images.insert(out.first);

  std::map<PhotonLabel, std::pair<PhotonLabel, int>> added;
  for (Propagation d : directions(entry.in_dir)) {
    const PhotonLabel in{entry.pol, d, entry.in_mode};
    const PhotonLabel out{entry.pol, entry.out_dir.value_or(d), entry.out_mode};
    if (table_.count(in) || added.count(in)) {
      throw PreconditionError("routing entries overlap at mode " + std::to_string(entry.in_mode));
    }
    if (!images.insert(out).second) {
      throw PreconditionError("routing rule is not injective into mode " +
                              std::to_string(entry.out_mode));
    }
    added.emplace(in, std::make_pair(out, entry.sign));
  }
  table_.merge(added);
  entries_.push_back(entry);
  return *this;
}

RoutingRule& RoutingRule::route(Mode in_mode, Polarization pol, Mode out_mode,
                                std::optional<Propagation> out_dir, int sign) {
  return route(Entry{in_mode, pol, std::nullopt, out_mode, out_dir, sign});
}

RoutingRule& RoutingRule::route(Mode in_mode, Polarization pol, Propagation in_dir, Mode out_mode,
                                std::optional<Propagation> out_dir, int sign) {
  return route(Entry{in_mode, pol, in_dir, out_mode, out_dir, sign});
}

RoutingRule& RoutingRule::discard(Mode in_mode, Polarization pol) {
  return route(Entry{in_mode, pol, std::nullopt, lost_mode(in_mode), std::nullopt, 1});
}

std::optional<PhotonLabel> RoutingRule::apply(const PhotonLabel& in, int* sign) const {
  if (auto it = table_.find(in); it != table_.end()) {
    if (sign) *sign = it->second.second;
    return it->second.first;
  }
  for (const auto& e : entries_) {
    if (e.in_mode == in.mode) return std::nullopt;
  }
  if (sign) *sign = 1;
  return in;
}

RoutingRule RoutingRule::inverse() const {
  RoutingRule inv;
  for (const auto& [in, out] : table_) {
    inv.route(Entry{out.first.mode, out.first.pol, out.first.dir, in.mode, in.dir, out.second});
  }
  return inv;
}

PhotonMap RoutingRule::as_map() const {
  return [rule = *this](const PhotonLabel& in) -> std::optional<Image<PhotonLabel>> {
    int sign = 1;
    auto out = rule.apply(in, &sign);
    if (!out) return std::nullopt;
    return Image<PhotonLabel>{{*out, static_cast<double>(sign)}};
  };
}

StateVector pbs(const StateVector& state, std::size_t photon, const RoutingRule& rule) {
  return apply_photon_map(state, photon, rule.as_map());
}

StateVector hadamard_p(const StateVector& state, std::size_t photon, std::optional<Mode> at) {
  return apply_photon_map(state, photon, [at](const PhotonLabel& in) -> std::optional<Image<PhotonLabel>> {
    if (at && in.mode != *at) return Image<PhotonLabel>{{in, 1.0}};
    PhotonLabel r = in;
    PhotonLabel l = in;
    r.pol = Polarization::R;
    l.pol = Polarization::L;
    const double sign = in.pol == Polarization::R ? 1.0 : -1.0;
    return Image<PhotonLabel>{{r, kInvSqrt2}, {l, sign * kInvSqrt2}};
  });
}

StateVector hadamard_e(const StateVector& state) {
  return apply_spin_map(state, [](SpinBasis s) -> std::optional<Image<SpinBasis>> {
    const double sign = s == SpinBasis::Up ? 1.0 : -1.0;
    return Image<SpinBasis>{{SpinBasis::Up, kInvSqrt2}, {SpinBasis::Down, sign * kInvSqrt2}};
  });
}

StateVector phase_pi(const StateVector& state, std::size_t photon, Mode mode) {
  return apply_photon_map(state, photon, [mode](const PhotonLabel& in) -> std::optional<Image<PhotonLabel>> {
    return Image<PhotonLabel>{{in, in.mode == mode ? -1.0 : 1.0}};
  });
}

StateVector delay_line(const StateVector& state) { return state; }

StateVector switch_route(const StateVector& state, std::size_t photon,
                         const SwitchSchedule& schedule, std::size_t pass) {
  if (pass == 0 || pass > schedule.epochs.size()) {
    throw ScheduleExhaustedError("switch pass " + std::to_string(pass) + " has no epoch (schedule has " +
                                 std::to_string(schedule.epochs.size()) + ")");
  }
  const auto& routes = schedule.epochs[pass - 1].routes;
  return apply_photon_map(state, photon, [&routes](const PhotonLabel& in) -> std::optional<Image<PhotonLabel>> {
    PhotonLabel out = in;
    if (auto it = routes.find(in.mode); it != routes.end()) out.mode = it->second;
    return Image<PhotonLabel>{{out, 1.0}};
  });
}

StateVector apply_pauli(const StateVector& state, std::size_t photon, Pauli pauli) {
  return apply_photon_map(state, photon, [pauli](const PhotonLabel& in) -> std::optional<Image<PhotonLabel>> {
    const bool r = in.pol == Polarization::R;
    switch (pauli) {
      case Pauli::Z:
        return Image<PhotonLabel>{{in, r ? 1.0 : -1.0}};
      case Pauli::MinusZ:
        return Image<PhotonLabel>{{in, r ? -1.0 : 1.0}};
      case Pauli::X: {
        PhotonLabel out = in;
        out.pol = flipped(in.pol);
        return Image<PhotonLabel>{{out, 1.0}};
      }
      case Pauli::Identity:
        break;
    }
    return Image<PhotonLabel>{{in, 1.0}};
  });
}

StateVector feed_forward(const StateVector& state, SpinBasis outcome, const FeedForwardRule& rule) {
  auto it = rule.find(outcome);
  if (it == rule.end()) return state;
  StateVector out = state;
  for (const auto& [photon, pauli] : it->second) out = apply_pauli(out, photon, pauli);
  return out;
}

}  // namespace qdc
