// Copyright 2026 The revseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

namespace revseq {

using Line = std::uint32_t;

enum class GateKind : std::uint8_t { Not, Cnot, Toffoli };

/// One gate of the NCT library. Controls are an unordered set (stored
/// sorted); equality is structural. Construction does not validate line
/// bounds or control/target overlap -- that is what validate() on the
/// owning circuit reports.
class Gate {
public:
  static Gate not_gate(Line target) { return Gate(GateKind::Not, {0, 0}, 0, target); }
  static Gate cnot(Line control, Line target) {
    return Gate(GateKind::Cnot, {control, 0}, 1, target);
  }
  static Gate toffoli(Line c0, Line c1, Line target) {
    if (c1 < c0) std::swap(c0, c1);
    return Gate(GateKind::Toffoli, {c0, c1}, 2, target);
  }

  GateKind kind() const { return kind_; }
  Line target() const { return target_; }
  std::span<const Line> controls() const { return {controls_.data(), arity_}; }
  unsigned num_controls() const { return arity_; }

  bool has_control(Line line) const {
    for (unsigned i = 0; i < arity_; ++i)
      if (controls_[i] == line) return true;
    return false;
  }

  /// Highest line index the gate touches.
  Line max_line() const {
    Line m = target_;
    for (unsigned i = 0; i < arity_; ++i)
      if (controls_[i] > m) m = controls_[i];
    return m;
  }

  std::uint64_t control_mask() const {
    std::uint64_t mask = 0;
    for (unsigned i = 0; i < arity_; ++i) mask |= std::uint64_t{1} << controls_[i];
    return mask;
  }
  std::uint64_t target_mask() const { return std::uint64_t{1} << target_; }

  friend bool operator==(const Gate& a, const Gate& b) {
    if (a.kind_ != b.kind_ || a.target_ != b.target_ || a.arity_ != b.arity_) return false;
    for (unsigned i = 0; i < a.arity_; ++i)
      if (a.controls_[i] != b.controls_[i]) return false;
    return true;
  }
  friend bool operator!=(const Gate& a, const Gate& b) { return !(a == b); }

private:
  Gate(GateKind kind, std::array<Line, 2> controls, unsigned arity, Line target)
      : kind_(kind), arity_(static_cast<std::uint8_t>(arity)), target_(target),
        controls_(controls) {}

  GateKind kind_;
  std::uint8_t arity_;
  Line target_;
  std::array<Line, 2> controls_;  // sorted ascending, [0, arity_)
};

std::string to_string(const Gate& gate);

}  // namespace revseq
