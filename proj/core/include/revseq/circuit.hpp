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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "revseq/bits.hpp"
#include "revseq/gate.hpp"

namespace revseq {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  std::optional<std::size_t> gate_index;
  std::optional<std::size_t> line_index;
};

/// Ordered list of structural violations. Empty means the circuit holds
/// every Gate/Circuit invariant.
struct Diagnostics {
  std::vector<Diagnostic> items;

  bool ok() const {
    for (const auto& d : items)
      if (d.severity == Severity::Error) return false;
    return true;
  }
  bool empty() const { return items.empty(); }
  std::string to_string() const;
};

/// An NCT circuit over `width` lines. Immutable after construction; the
/// induced mapping on bit vectors is a bijection for every valid circuit.
/// Widths beyond 64 are rejected by validate() (bit vectors are packed
/// words); exhaustive operations are further capped at 24 lines.
class Circuit {
public:
  Circuit() = default;
  explicit Circuit(unsigned width, std::vector<Gate> gates = {},
                   std::vector<std::string> line_names = {});

  unsigned width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<std::string>& line_names() const { return line_names_; }
  const std::string& line_name(Line line) const { return line_names_.at(line); }

  /// Index of the named line, if declared.
  std::optional<Line> find_line(const std::string& name) const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.width_ == b.width_ && a.gates_ == b.gates_ && a.line_names_ == b.line_names_;
  }

private:
  unsigned width_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::string> line_names_;
};

/// Total over arbitrary malformed input; never throws.
Diagnostics validate(const Circuit& circuit);

/// Reversed gate sequence. Composing `circuit` then its inverse is the
/// identity on every bit vector (every NCT gate is its own inverse).
/// Throws std::invalid_argument on an invalid circuit.
Circuit inverse(const Circuit& circuit);

/// Gates of `first` followed by gates of `second`; widths must match.
Circuit concatenate(const Circuit& first, const Circuit& second);

/// Throws std::invalid_argument when validate() reports an error.
void require_valid(const Circuit& circuit);

/// Default names x0..x{width-1}.
std::vector<std::string> default_line_names(unsigned width);

}  // namespace revseq
