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

#include "revseq/optimize.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "revseq/simulate.hpp"

namespace revseq {

bool can_swap(const Gate& g1, const Gate& g2) {
  return !g2.has_control(g1.target()) && !g1.has_control(g2.target());
}

Circuit deletion_pass(const Circuit& circuit) {
  std::vector<Gate> out;
  out.reserve(circuit.size());
  for (const Gate& g : circuit.gates()) {
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return Circuit(circuit.width(), std::move(out), circuit.line_names());
}

void validate_template(const Template& tmpl) {
  if (tmpl.width > max_enum_width)
    throw std::invalid_argument("template wider than the enumeration cap");
  Circuit c(tmpl.width, tmpl.gates);
  Diagnostics diags = validate(c);
  if (!diags.ok())
    throw std::invalid_argument("malformed template gate list:\n" + diags.to_string());
  if (!permutation_of(c).is_identity())
    throw std::invalid_argument("template '" + tmpl.name + "' does not compose to the identity");
  if (tmpl.size() > 2) {
    for (std::size_t i = 0; i + 1 < tmpl.size(); ++i)
      if (tmpl.gates[i] == tmpl.gates[i + 1])
        throw std::invalid_argument("template '" + tmpl.name +
                                    "' has adjacent duplicate gates (deletion rule territory)");
  }
}

std::vector<Template> default_templates() {
  std::vector<Template> set;
  auto add = [&](unsigned width, std::vector<Gate> gates, std::string name) {
    Template t{width, std::move(gates), std::move(name)};
    validate_template(t);
    set.push_back(std::move(t));
  };

  // Duplicate pairs: the deletion rule as templates, one per gate shape.
  add(1, {Gate::not_gate(0), Gate::not_gate(0)}, "dup-not");
  add(2, {Gate::cnot(0, 1), Gate::cnot(0, 1)}, "dup-cnot");
  add(3, {Gate::toffoli(0, 1, 2), Gate::toffoli(0, 1, 2)}, "dup-toffoli");

  // Commuting squares.
  add(3, {Gate::cnot(0, 2), Gate::cnot(1, 2), Gate::cnot(0, 2), Gate::cnot(1, 2)},
      "square-shared-target");
  add(3, {Gate::cnot(0, 1), Gate::cnot(0, 2), Gate::cnot(0, 1), Gate::cnot(0, 2)},
      "square-shared-control");

  // CNOT chain: two interleaved CNOT pairs leave a single CNOT behind.
  add(3,
      {Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(0, 2)},
      "cnot-chain");

  // Control merge through a CNOT-toggled control line.
  add(4,
      {Gate::cnot(0, 1), Gate::toffoli(1, 2, 3), Gate::cnot(0, 1), Gate::toffoli(1, 2, 3),
       Gate::toffoli(0, 2, 3)},
      "toffoli-control-merge");

  return set;
}

OptConfig OptConfig::all() { return OptConfig{}; }

OptConfig OptConfig::only(unsigned passes) {
  OptConfig config;
  config.passes = passes;
  return config;
}

namespace {

// Cancels identical gate pairs that can be brought adjacent by the
// moving rule: the left gate commutes past every gate in between.
// Without the moving pass only directly adjacent pairs cancel.
bool cancel_pass(std::vector<Gate>& gates, bool moving) {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    for (std::size_t j = i + 1; j < gates.size(); ++j) {
      if (gates[i] == gates[j]) {
        gates.erase(gates.begin() + j);
        gates.erase(gates.begin() + i);
        return true;
      }
      if (!moving || !can_swap(gates[i], gates[j])) break;
    }
  }
  return false;
}

// Incremental injective line substitution: template line -> circuit line.
struct Substitution {
  std::map<Line, Line> fwd;
  std::map<Line, Line> rev;

  bool bind(Line tmpl_line, Line circ_line) {
    auto f = fwd.find(tmpl_line);
    if (f != fwd.end()) return f->second == circ_line;
    auto r = rev.find(circ_line);
    if (r != rev.end()) return false;
    fwd[tmpl_line] = circ_line;
    rev[circ_line] = tmpl_line;
    return true;
  }

  bool match_gate(const Gate& tmpl_gate, const Gate& circ_gate) {
    if (tmpl_gate.kind() != circ_gate.kind()) return false;
    if (!bind(tmpl_gate.target(), circ_gate.target())) return false;
    const auto tc = tmpl_gate.controls();
    const auto cc = circ_gate.controls();
    if (tc.size() != cc.size()) return false;
    if (tc.size() == 1) return bind(tc[0], cc[0]);
    if (tc.size() == 2) {
      // Control sets are unordered; try both pairings.
      Substitution saved = *this;
      if (bind(tc[0], cc[0]) && bind(tc[1], cc[1])) return true;
      *this = saved;
      return bind(tc[0], cc[1]) && bind(tc[1], cc[0]);
    }
    return true;
  }

  Gate apply(const Gate& g, unsigned circuit_width) const {
    auto map_line = [&](Line l) {
      auto it = fwd.find(l);
      if (it == fwd.end() || it->second >= circuit_width)
        throw std::logic_error("unbound template line in replacement");
      return it->second;
    };
    switch (g.kind()) {
      case GateKind::Not: return Gate::not_gate(map_line(g.target()));
      case GateKind::Cnot: return Gate::cnot(map_line(g.controls()[0]), map_line(g.target()));
      case GateKind::Toffoli:
        return Gate::toffoli(map_line(g.controls()[0]), map_line(g.controls()[1]),
                             map_line(g.target()));
    }
    throw std::logic_error("unreachable");
  }

  bool fully_bound(const Template& tmpl) const {
    for (const Gate& g : tmpl.gates) {
      if (!fwd.count(g.target())) return false;
      for (Line c : g.controls())
        if (!fwd.count(c)) return false;
    }
    return true;
  }
};

struct Match {
  std::size_t start = 0;           // window start in the circuit
  std::vector<std::size_t> used;   // circuit positions matched, ascending
  std::vector<Gate> replacement;   // substituted remainder
};

// Tries to match k = tmpl.size() down to floor(m/2)+1 consecutive
// template gates (rotation r, forward or reversed) starting at circuit
// position `start`. Gates in between that commute past the matched
// prefix may be skipped when the moving rule is enabled.
std::optional<Match> match_template_at(const std::vector<Gate>& gates, std::size_t start,
                                       const Template& tmpl, bool moving, unsigned width) {
  const std::size_t m = tmpl.size();
  for (std::size_t k = m; k * 2 > m; --k) {
    for (std::size_t rot = 0; rot < m; ++rot) {
      for (int rev = 0; rev < 2; ++rev) {
        Substitution sub;
        std::vector<std::size_t> used;
        std::vector<Gate> skipped;
        std::size_t pos = start;
        std::size_t matched = 0;
        while (matched < k && pos < gates.size()) {
          const std::size_t idx =
              rev ? (rot + k - 1 - matched) % m : (rot + matched) % m;
          Substitution attempt = sub;
          bool ok = attempt.match_gate(tmpl.gates[idx], gates[pos]);
          if (ok) {
            // The matched gate must commute left past everything skipped.
            for (const Gate& sk : skipped)
              if (!can_swap(sk, gates[pos])) {
                ok = false;
                break;
              }
          }
          if (ok) {
            sub = attempt;
            used.push_back(pos);
            ++matched;
          } else {
            if (!moving || matched == 0) break;
            skipped.push_back(gates[pos]);
          }
          ++pos;
        }
        if (matched < k) continue;

        // Replacement: the remaining m-k template gates. A forward
        // match of a cyclic identity equals the reversed remainder; a
        // reversed match equals the remainder in forward order.
        std::vector<Gate> remainder;
        for (std::size_t i = k; i < m; ++i) remainder.push_back(tmpl.gates[(rot + i) % m]);
        if (!rev) std::reverse(remainder.begin(), remainder.end());

        // Any template line appearing only in the remainder is free;
        // bind it to an unused circuit line if one exists.
        std::vector<bool> taken(width, false);
        for (const auto& [tl, cl] : sub.fwd) {
          (void)tl;
          taken[cl] = true;
        }
        bool bound = true;
        for (const Gate& g : remainder) {
          std::vector<Line> lines(g.controls().begin(), g.controls().end());
          lines.push_back(g.target());
          for (Line l : lines) {
            if (sub.fwd.count(l)) continue;
            Line fresh = 0;
            while (fresh < width && taken[fresh]) ++fresh;
            if (fresh >= width) {
              bound = false;
              break;
            }
            sub.bind(l, fresh);
            taken[fresh] = true;
          }
          if (!bound) break;
        }
        if (!bound || !sub.fully_bound(tmpl)) continue;

        Match match;
        match.start = start;
        match.used = std::move(used);
        for (const Gate& g : remainder) match.replacement.push_back(sub.apply(g, width));
        return match;
      }
    }
  }
  return std::nullopt;
}

bool template_pass(std::vector<Gate>& gates, const std::vector<Template>& templates, bool moving,
                   unsigned width) {
  for (std::size_t start = 0; start < gates.size(); ++start) {
    for (const Template& tmpl : templates) {
      auto match = match_template_at(gates, start, tmpl, moving, width);
      if (!match) continue;
      // Rebuild: prefix, replacement, the skipped gates in their
      // original relative order, then the tail.
      std::vector<Gate> out(gates.begin(), gates.begin() + start);
      out.insert(out.end(), match->replacement.begin(), match->replacement.end());
      std::size_t used_at = 0;
      const std::size_t window_end = match->used.back() + 1;
      for (std::size_t i = start; i < window_end; ++i) {
        if (used_at < match->used.size() && match->used[used_at] == i)
          ++used_at;
        else
          out.push_back(gates[i]);
      }
      out.insert(out.end(), gates.begin() + window_end, gates.end());
      gates = std::move(out);
      return true;
    }
  }
  return false;
}

}  // namespace

Circuit optimize(const Circuit& circuit, const OptConfig& config) {
  require_valid(circuit);
  for (const Template& tmpl : config.templates) validate_template(tmpl);
  if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");

  const bool moving = config.enabled(Pass::Moving);
  std::vector<Gate> gates = circuit.gates();
  for (unsigned iter = 0; iter < config.max_iterations; ++iter) {
    bool changed = false;
    if (config.enabled(Pass::Deletion))
      while (cancel_pass(gates, moving)) changed = true;
    if (config.enabled(Pass::TemplateMatch))
      while (template_pass(gates, config.templates, moving, circuit.width())) {
        changed = true;
        if (config.enabled(Pass::Deletion))
          while (cancel_pass(gates, moving)) {
          }
      }
    if (!changed) break;
  }
  return Circuit(circuit.width(), std::move(gates), circuit.line_names());
}

}  // namespace revseq
