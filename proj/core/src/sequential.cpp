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

#include "revseq/sequential.hpp"

#include <stdexcept>

namespace revseq {

std::optional<std::string> complement_base(const std::string& name) {
  if (name.size() > 3 && name.ends_with("bar")) return name.substr(0, name.size() - 3);
  return std::nullopt;
}

bool default_initial_bit(const std::string& state_var,
                         const std::vector<std::string>& all_state_vars) {
  if (auto base = complement_base(state_var)) {
    for (const auto& other : all_state_vars)
      if (other == *base) return true;
  }
  return false;
}

Diagnostics validate_sequential(const SequentialCircuit& seq) {
  Diagnostics diags = validate(seq.body);
  auto error = [&](std::string msg, std::optional<std::size_t> line = std::nullopt) {
    diags.items.push_back({Severity::Error, std::move(msg), std::nullopt, line});
  };

  const unsigned w = seq.body.width();
  std::vector<int> role(w, 0);  // bit0 input, bit1 state-in, bit2 constant
  auto claim = [&](Line line, int bit, const std::string& what) {
    if (line >= w) {
      error(what + " line index out of range", line);
      return;
    }
    if (role[line] != 0) error(what + " overlaps another input-side role", line);
    role[line] |= bit;
  };

  for (const auto& [name, line] : seq.input_lines) claim(line, 1, "input '" + name + "'");
  for (const auto& [name, binding] : seq.state_lines) {
    claim(binding.in_line, 2, "state '" + name + "'");
    if (binding.out_line >= w) error("state '" + name + "' output-side line out of range");
  }
  for (const auto& [line, value] : seq.constant_lines) {
    (void)value;
    claim(line, 4, "constant");
  }
  for (Line line = 0; line < w; ++line)
    if (role[line] == 0) error("line has no input-side role (input, state or constant)", line);

  for (Line line : seq.refresh_lines)
    if (!seq.constant_lines.count(line)) error("refresh line is not a constant line", line);

  for (const auto& [name, line] : seq.output_lines)
    if (line >= w) error("output '" + name + "' line index out of range");

  for (const auto& [name, value] : seq.initial_state) {
    (void)value;
    if (!seq.state_lines.count(name)) error("initial state for unknown variable '" + name + "'");
  }
  return diags;
}

void require_valid(const SequentialCircuit& seq) {
  Diagnostics diags = validate_sequential(seq);
  if (!diags.ok()) throw std::invalid_argument("invalid sequential circuit:\n" + diags.to_string());
}

StepResult step(const SequentialCircuit& seq, const BitAssignment& state,
                const BitAssignment& inputs) {
  Bits v = 0;
  for (const auto& [line, value] : seq.constant_lines) v = bits::set(v, line, value);
  // Refresh lines are constants; forcing them happens with the
  // assembly above, before the body runs.
  for (const auto& [name, binding] : seq.state_lines) {
    auto it = state.find(name);
    if (it == state.end()) throw std::invalid_argument("missing state binding '" + name + "'");
    v = bits::set(v, binding.in_line, it->second);
  }
  for (const auto& [name, value] : state)
    if (!seq.state_lines.count(name))
      throw std::invalid_argument("unknown state variable '" + name + "'");
  for (const auto& [name, line] : seq.input_lines) {
    auto it = inputs.find(name);
    if (it == inputs.end()) throw std::invalid_argument("missing input binding '" + name + "'");
    v = bits::set(v, line, it->second);
  }
  for (const auto& [name, value] : inputs)
    if (!seq.input_lines.count(name)) throw std::invalid_argument("unknown input '" + name + "'");

  const Bits out = evaluate(seq.body, v);

  StepResult result;
  for (const auto& [name, binding] : seq.state_lines)
    result.next_state[name] = bits::get(out, binding.out_line);
  for (const auto& [name, line] : seq.output_lines)
    result.outputs[name] = bits::get(out, line);
  return result;
}

std::vector<BitAssignment> run_trace(const SequentialCircuit& seq, const Trace& trace) {
  BitAssignment state = seq.initial_state;
  for (const auto& [name, binding] : seq.state_lines) {
    (void)binding;
    if (!state.count(name))
      throw std::invalid_argument("initial state missing variable '" + name + "'");
  }
  std::vector<BitAssignment> outputs;
  outputs.reserve(trace.steps.size());
  for (const BitAssignment& inputs : trace.steps) {
    StepResult r = step(seq, state, inputs);
    outputs.push_back(std::move(r.outputs));
    state = std::move(r.next_state);
  }
  return outputs;
}

}  // namespace revseq
