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

#include <stdexcept>

#include "revseq/circuit.hpp"
#include "revseq/simulate.hpp"

namespace revseq {

enum class SynthMethod { Unidirectional, Bidirectional };

/// Raised when the permutation cannot be realised over plain NCT
/// gates: odd permutations on four or more lines (every NCT gate is an
/// even permutation there). Widths up to three realise everything.
class SynthesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scans input rows in ascending order, appending output-side gates
/// (lowest arity first, lowest-index controls) that map each row's
/// current image to its target without disturbing already-fixed rows.
/// permutation_of(result) equals perm exactly. Width <= 12.
Circuit synth_unidirectional(const Permutation& perm);

/// Per row, candidate gate sequences are computed for both the output
/// side and the input side (building the inverse); the cheaper side is
/// chosen, ties to the output side.
Circuit synth_bidirectional(const Permutation& perm);

Circuit synthesize(const Permutation& perm, SynthMethod method);

}  // namespace revseq
