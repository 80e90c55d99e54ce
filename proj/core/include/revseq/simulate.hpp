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

#include <cstdint>
#include <vector>

#include "revseq/circuit.hpp"

namespace revseq {

/// Exhaustive enumeration over 2^width vectors is capped here; wider
/// circuits may still be simulated one vector at a time.
inline constexpr unsigned max_enum_width = 24;

/// Explicit mapping of all 2^width input vectors: table[i] is the image
/// of vector i. Valid tables are bijections.
struct Permutation {
  unsigned width = 0;
  std::vector<std::uint32_t> table;

  std::size_t size() const { return table.size(); }
  bool is_identity() const;
  bool is_valid() const;

  static Permutation identity(unsigned width);

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// XORs the target bit with the AND of the control bits (NOT flips
/// unconditionally); all other bits pass through.
Bits apply_gate(const Gate& gate, Bits bits, unsigned width);

/// Applies the gates in sequence order.
Bits evaluate(const Circuit& circuit, Bits bits);

/// table[i] = evaluate(circuit, i). Requires width <= max_enum_width.
Permutation permutation_of(const Circuit& circuit);

struct TableRow {
  Bits input = 0;
  Bits output = 0;
};

struct Collision {
  Bits input_a = 0;
  Bits input_b = 0;
  Bits output = 0;
};

struct BijectivityReport {
  bool is_bijective = true;
  std::vector<Collision> collisions;
};

/// Reports every pair of rows that share an output value. Throws on
/// rows wider than `width` or duplicate input rows.
BijectivityReport check_bijective(const std::vector<TableRow>& rows, unsigned width);

/// Convenience: rows of a permutation table.
BijectivityReport check_bijective(const Permutation& perm);

}  // namespace revseq
