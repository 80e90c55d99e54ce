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

#include "revseq/cost.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace revseq {

namespace {

// A constant line is "restored" when its output equals its constant on
// every reachable input vector: constants pinned, external inputs free,
// state variables free except that complement-named pairs stay
// consistent.
std::set<Line> restored_constants(const SequentialCircuit& seq) {
  std::vector<std::string> state_names;
  for (const auto& [name, binding] : seq.state_lines) {
    (void)binding;
    state_names.push_back(name);
  }
  std::vector<std::string> free_vars;
  std::vector<std::pair<std::string, std::string>> complements;
  for (const std::string& name : state_names) {
    auto base = complement_base(name);
    if (base && seq.state_lines.count(*base))
      complements.emplace_back(name, *base);
    else
      free_vars.push_back(name);
  }

  const std::size_t free_bits = free_vars.size() + seq.input_lines.size();
  if (free_bits > 20)
    throw std::invalid_argument("too many free lines for the exhaustive garbage check");

  std::set<Line> candidates;
  for (const auto& [line, value] : seq.constant_lines) {
    (void)value;
    candidates.insert(line);
  }

  Bits base_vec = 0;
  for (const auto& [line, value] : seq.constant_lines) base_vec = bits::set(base_vec, line, value);

  const std::size_t n = std::size_t{1} << free_bits;
  for (std::size_t combo = 0; combo < n && !candidates.empty(); ++combo) {
    Bits v = base_vec;
    std::size_t bit = 0;
    BitAssignment state;
    for (const std::string& name : free_vars) state[name] = (combo >> bit++) & 1;
    for (const auto& [name, base] : complements) state[name] = !state[base];
    for (const auto& [name, binding] : seq.state_lines)
      v = bits::set(v, binding.in_line, state.at(name));
    for (const auto& [name, line] : seq.input_lines) {
      (void)name;
      v = bits::set(v, line, (combo >> bit++) & 1);
    }

    const Bits out = evaluate(seq.body, v);
    for (auto it = candidates.begin(); it != candidates.end();) {
      if (bits::get(out, *it) != seq.constant_lines.at(*it))
        it = candidates.erase(it);
      else
        ++it;
    }
  }
  return candidates;
}

}  // namespace

std::vector<LineRole> classify_lines(const SequentialCircuit& seq) {
  require_valid(seq);
  const unsigned w = seq.body.width();
  std::vector<LineRole> roles(w, LineRole::Garbage);

  const std::set<Line> restored = restored_constants(seq);
  for (Line line : restored) roles[line] = LineRole::RestoredConstant;
  for (const auto& [name, binding] : seq.state_lines) {
    (void)name;
    roles[binding.out_line] = LineRole::Feedback;
  }
  for (const auto& [name, line] : seq.output_lines) {
    (void)name;
    roles[line] = LineRole::PrimaryOutput;
  }
  return roles;
}

CostReport count_report(const SequentialCircuit& seq) {
  CostReport report;
  for (const Gate& g : seq.body.gates()) {
    switch (g.kind()) {
      case GateKind::Not: ++report.not_count; break;
      case GateKind::Cnot: ++report.cnot_count; break;
      case GateKind::Toffoli: ++report.toffoli_count; break;
    }
  }
  report.total = report.not_count + report.cnot_count + report.toffoli_count;
  for (LineRole role : classify_lines(seq))
    if (role == LineRole::Garbage) ++report.garbage;
  return report;
}

std::uint64_t weighted_cost(const CostReport& report, const CostModel& model) {
  return std::uint64_t{report.not_count} * model.weight(GateKind::Not) +
         std::uint64_t{report.cnot_count} * model.weight(GateKind::Cnot) +
         std::uint64_t{report.toffoli_count} * model.weight(GateKind::Toffoli);
}

ComplexityEstimate exact_opt_complexity(unsigned n, unsigned m, unsigned l) {
  if (n < 1 || l < 1) throw std::invalid_argument("exact_opt_complexity requires n >= 1, l >= 1");
  ComplexityEstimate est;
  est.n = n;
  est.m = m;
  est.l = l;
  est.log2_tau = 2.0 * n + double(l) * double(m) * std::log2(double(n));
  if (est.log2_tau <= 63.0)
    est.tau = static_cast<std::uint64_t>(std::llround(std::exp2(est.log2_tau)));
  return est;
}

}  // namespace revseq
