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

#include "revseq/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace revseq {

std::string to_string(const Gate& gate) {
  std::ostringstream out;
  switch (gate.kind()) {
    case GateKind::Not: out << "t1"; break;
    case GateKind::Cnot: out << "t2"; break;
    case GateKind::Toffoli: out << "t3"; break;
  }
  for (Line c : gate.controls()) out << ' ' << c;
  out << ' ' << gate.target();
  return out.str();
}

std::vector<std::string> default_line_names(unsigned width) {
  std::vector<std::string> names;
  names.reserve(width);
  for (unsigned i = 0; i < width; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Circuit::Circuit(unsigned width, std::vector<Gate> gates, std::vector<std::string> line_names)
    : width_(width), gates_(std::move(gates)), line_names_(std::move(line_names)) {
  if (line_names_.empty()) line_names_ = default_line_names(width);
}

std::optional<Line> Circuit::find_line(const std::string& name) const {
  auto it = std::find(line_names_.begin(), line_names_.end(), name);
  if (it == line_names_.end()) return std::nullopt;
  return static_cast<Line>(it - line_names_.begin());
}

std::string Diagnostics::to_string() const {
  std::ostringstream out;
  for (const auto& d : items) {
    out << (d.severity == Severity::Error ? "error: " : "warning: ") << d.message;
    if (d.gate_index) out << " (gate " << *d.gate_index << ")";
    if (d.line_index) out << " (line " << *d.line_index << ")";
    out << '\n';
  }
  return out.str();
}

Diagnostics validate(const Circuit& circuit) {
  Diagnostics diags;
  auto error = [&](std::string msg, std::optional<std::size_t> gate = std::nullopt,
                   std::optional<std::size_t> line = std::nullopt) {
    diags.items.push_back({Severity::Error, std::move(msg), gate, line});
  };

  if (circuit.width() > bits::max_width)
    error("width exceeds the 64-line simulation limit");

  if (circuit.line_names().size() != circuit.width())
    error("line name count does not match width");
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < circuit.line_names().size(); ++i) {
    if (!seen.insert(circuit.line_names()[i]).second)
      error("duplicate line name '" + circuit.line_names()[i] + "'", std::nullopt, i);
  }

  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    const Gate& g = circuit.gates()[i];
    if (g.target() >= circuit.width())
      error("line index out of range", i);
    Line prev = 0;
    bool first = true;
    for (Line c : g.controls()) {
      if (c >= circuit.width()) error("line index out of range", i);
      if (c == g.target()) error("target in controls", i);
      if (!first && c == prev) error("duplicate control line", i);
      prev = c;
      first = false;
    }
  }
  return diags;
}

void require_valid(const Circuit& circuit) {
  Diagnostics diags = validate(circuit);
  if (!diags.ok()) throw std::invalid_argument("invalid circuit:\n" + diags.to_string());
}

Circuit inverse(const Circuit& circuit) {
  require_valid(circuit);
  std::vector<Gate> reversed(circuit.gates().rbegin(), circuit.gates().rend());
  return Circuit(circuit.width(), std::move(reversed), circuit.line_names());
}

Circuit concatenate(const Circuit& first, const Circuit& second) {
  if (first.width() != second.width())
    throw std::invalid_argument("cannot concatenate circuits of different widths");
  std::vector<Gate> gates = first.gates();
  gates.insert(gates.end(), second.gates().begin(), second.gates().end());
  return Circuit(first.width(), std::move(gates), first.line_names());
}

}  // namespace revseq
