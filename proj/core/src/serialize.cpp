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

#include <charconv>
#include <cstdio>
#include <sstream>

#include "qdc/error.hpp"
#include "qdc/hilbert.hpp"

namespace qdc {
namespace {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw StructuralError("state parse error on line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) parse_fail(line, "bad number '" + std::string(s) + "'");
  return v;
}

PhotonLabel parse_photon(std::string_view s, std::size_t line) {
  const auto fields = split(s, '/');
  if (fields.size() != 3) parse_fail(line, "photon label needs pol/dir/mode");
  PhotonLabel p;
  if (fields[0] == "R") {
    p.pol = Polarization::R;
  } else if (fields[0] == "L") {
    p.pol = Polarization::L;
  } else {
    parse_fail(line, "bad polarization");
  }
  if (fields[1] == "u") {
    p.dir = Propagation::AlongZ;
  } else if (fields[1] == "d") {
    p.dir = Propagation::AgainstZ;
  } else {
    parse_fail(line, "bad direction");
  }
  unsigned mode = 0;
  const auto* end = fields[2].data() + fields[2].size();
  auto [ptr, ec] = std::from_chars(fields[2].data(), end, mode);
  if (ec != std::errc{} || ptr != end || mode > 0xFFFF) parse_fail(line, "bad mode");
  p.mode = static_cast<Mode>(mode);
  return p;
}

}  // namespace

std::string to_string(Polarization p) { return p == Polarization::R ? "R" : "L"; }
std::string to_string(Propagation d) { return d == Propagation::AlongZ ? "u" : "d"; }
std::string to_string(SpinBasis s) { return s == SpinBasis::Up ? "u" : "d"; }

std::string serialize(const StateVector& state) {
  std::ostringstream out;
  for (const auto& [ket, amp] : state.amplitudes()) {
    for (std::size_t i = 0; i < ket.photons.size(); ++i) {
      const auto& p = ket.photons[i];
      if (i) out << ',';
      out << to_string(p.pol) << '/' << to_string(p.dir) << '/' << p.mode;
    }
    out << " | " << (ket.spin ? to_string(*ket.spin) : "-");
    out << " : " << format_double(amp.real()) << ',' << format_double(amp.imag()) << '\n';
  }
  return out.str();
}

StateVector parse_state(std::string_view text) {
  std::optional<StateVector> state;
  std::size_t line_no = 0;
  for (std::string_view rest = text; !rest.empty();) {
    const auto nl = rest.find('\n');
    std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto bar = line.find('|');
    const auto colon = line.find(':', bar == std::string_view::npos ? 0 : bar);
    if (bar == std::string_view::npos || colon == std::string_view::npos) {
      parse_fail(line_no, "expected 'photons | spin : re,im'");
    }
    BasisKet ket;
    const auto photon_part = trim(line.substr(0, bar));
    if (!photon_part.empty()) {
      for (auto field : split(photon_part, ',')) ket.photons.push_back(parse_photon(field, line_no));
    }
    const auto spin_part = trim(line.substr(bar + 1, colon - bar - 1));
    if (spin_part == "u") {
      ket.spin = SpinBasis::Up;
    } else if (spin_part == "d") {
      ket.spin = SpinBasis::Down;
    } else if (spin_part != "-") {
      parse_fail(line_no, "bad spin");
    }
    const auto nums = split(line.substr(colon + 1), ',');
    if (nums.size() != 2) parse_fail(line_no, "amplitude needs re,im");
    const Complex amp{parse_double(nums[0], line_no), parse_double(nums[1], line_no)};

    if (!state) state.emplace(Layout{ket.photons.size(), ket.spin.has_value()});
    state->add(ket, amp);
  }
  return state ? state->pruned() : StateVector{};
}

}  // namespace qdc
