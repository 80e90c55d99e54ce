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
#include <string>
#include <vector>

#include "revseq/flipflops.hpp"
#include "revseq/sequential.hpp"

namespace revseq {

enum class Variant { D1, D2, D3 };

std::string to_string(Variant variant);

struct DesignId {
  Family family = Family::SR;
  Variant variant = Variant::D1;

  /// Identifier scheme used on the command line, e.g. "sr-d1".
  std::string name() const;

  friend auto operator<=>(const DesignId&, const DesignId&) = default;
};

std::optional<DesignId> design_from_string(const std::string& name);

/// All eighteen built-in designs: six families, three variants each.
/// D1 and D2 are the feedback styles, D3 replaces feedback with the
/// refresh mechanism (the T flip-flop D3 needs neither).
std::vector<DesignId> all_designs();

/// Builds the named design. Every returned circuit passes verify_design
/// against its family spec. Throws on an unknown id.
SequentialCircuit build_design(DesignId id);

/// How a design was obtained: "prose" designs are fully determined by
/// the published description; the rest are behaviour-constrained
/// reconstructions (the original figures are not available).
enum class Provenance { Prose, Reconstruction };

struct DesignInfo {
  DesignId id;
  Provenance provenance = Provenance::Prose;
  std::string note;
};

DesignInfo design_info(DesignId id);

enum class MacroKind { Fredkin, Copy, And, Nand, Or, Nor };

std::string to_string(MacroKind kind);

/// NCT expansion of a classical operation. The circuit computes the
/// named truth function onto the ancilla line when the ancilla is
/// preset as recorded here; input lines are restored. Fredkin has no
/// ancilla -- it swaps its two data lines in place under the control.
struct MacroExpansion {
  Circuit circuit;
  std::optional<Line> ancilla;
  bool ancilla_preset = false;
  std::vector<Line> data_lines;
};

MacroExpansion expand_macro(MacroKind kind);

}  // namespace revseq
