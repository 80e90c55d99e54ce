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
#include <stdexcept>
#include <string>
#include <vector>

#include "revseq/optimize.hpp"
#include "revseq/sequential.hpp"
#include "revseq/simulate.hpp"

namespace revseq {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct ParseOptions {
  /// Reject documents that would need foreign-gate expansion (`f3`);
  /// the in-memory IR is NCT-only, so keeping foreign gates is a
  /// parse error rather than a representation.
  bool keep_foreign = false;
};

/// Parses the revseq-1 netlist grammar. Fredkin (`f3 c a b`) is
/// expanded into its three-gate NCT form. Throws ParseError with a
/// line number on malformed input.
SequentialCircuit parse_netlist(const std::string& text, const ParseOptions& options = {});

/// Canonical form: directives in fixed order, one gate per line,
/// lowercase mnemonics. parse_netlist(emit_netlist(seq)) == seq.
std::string emit_netlist(const SequentialCircuit& seq);

/// Truth-table documents: lines of `bits -> bits`, uniform width,
/// `#` comments. Inputs must be pairwise distinct.
std::vector<TableRow> parse_truth_table(const std::string& text, unsigned& width_out);

/// Requires a complete bijective table covering all 2^width rows;
/// reports the first collision otherwise.
Permutation truth_table_to_permutation(const std::vector<TableRow>& rows, unsigned width);

/// Template files: `.template <width>` blocks over lines x0..x<w-1>,
/// terminated by `.end`. Every template is identity-checked at load.
std::vector<Template> parse_templates(const std::string& text);

}  // namespace revseq
