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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "revseq/circuit.hpp"
#include "revseq/simulate.hpp"

namespace revseq {

/// Feedback wiring of one state variable: the value read from
/// `out_line` after a step becomes the value of `in_line` at the next
/// step. Same-line bindings model a line that simply persists.
struct StateBinding {
  Line in_line = 0;
  Line out_line = 0;

  friend bool operator==(const StateBinding&, const StateBinding&) = default;
};

using BitAssignment = std::map<std::string, bool>;

/// A clocked circuit: the combinational body plus role bindings for its
/// lines. The sets {external inputs, state input-side lines, constant
/// lines} partition the body's input lines. Refresh lines are constant
/// lines re-forced to their constants at the start of every step.
struct SequentialCircuit {
  Circuit body;
  std::map<std::string, Line> input_lines;
  std::map<std::string, StateBinding> state_lines;
  std::map<Line, bool> constant_lines;
  std::set<Line> refresh_lines;
  std::map<std::string, Line> output_lines;  // primary outputs, output side
  BitAssignment initial_state;

  friend bool operator==(const SequentialCircuit&, const SequentialCircuit&) = default;
};

/// Structural checks for the role bindings on top of validate(body).
Diagnostics validate_sequential(const SequentialCircuit& seq);

void require_valid(const SequentialCircuit& seq);

struct StepResult {
  BitAssignment next_state;
  BitAssignment outputs;
};

/// One clock step: assembles the input vector from constants, fed-back
/// state and external inputs, evaluates the body once, and reads the
/// output-side bindings. Deterministic and pure.
StepResult step(const SequentialCircuit& seq, const BitAssignment& state,
                const BitAssignment& inputs);

/// One assignment of every external input per clock step.
struct Trace {
  std::vector<BitAssignment> steps;
};

/// Iterates step() from seq.initial_state; one output map per step.
std::vector<BitAssignment> run_trace(const SequentialCircuit& seq, const Trace& trace);

/// State variables default to 0 except complement-named ones ("qbar"
/// paired with "q"), which default to 1.
bool default_initial_bit(const std::string& state_var,
                         const std::vector<std::string>& all_state_vars);

/// Name of the variable this one complements ("qbar" -> "q"), if the
/// naming convention applies.
std::optional<std::string> complement_base(const std::string& name);

}  // namespace revseq
