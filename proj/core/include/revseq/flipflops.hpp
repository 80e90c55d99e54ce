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

#include <optional>
#include <string>
#include <vector>

#include "revseq/sequential.hpp"

namespace revseq {

enum class Family { SR, D, JK, T, MSD, MSJK };

std::string to_string(Family family);
std::optional<Family> family_from_string(const std::string& name);

/// Ground-truth next-state behaviour of one flip-flop family, stated
/// over the primary state variables only; a complement-named variable
/// ("qbar") in a circuit is checked against the negated primary bit.
struct NextStateSpec {
  Family family = Family::SR;
  std::vector<std::string> inputs;
  std::vector<std::string> state_vars;  // primary bits: q, and m for master-slave
  std::vector<std::string> outputs;

  BitAssignment next(const BitAssignment& state, const BitAssignment& in) const;

  /// Output bits as a function of the post-step state (Q+ convention).
  BitAssignment output_bits(const BitAssignment& next_state) const;
};

NextStateSpec flipflop_spec(Family family);

struct Counterexample {
  BitAssignment state;
  BitAssignment inputs;
  BitAssignment expected;  // next-state bits and output bits, by name
  BitAssignment actual;
};

struct VerificationReport {
  bool pass = false;
  std::size_t cases_checked = 0;
  std::optional<Counterexample> counterexample;
};

/// Exhaustively enumerates every consistent (state, inputs) pair --
/// complement-named state variables are kept at the negation of their
/// base -- and compares step() against the behavioural spec. Also
/// checks that the body's permutation is a bijection. Throws on a name
/// mismatch between circuit bindings and the spec.
VerificationReport verify_design(const SequentialCircuit& seq, const NextStateSpec& spec);

}  // namespace revseq
