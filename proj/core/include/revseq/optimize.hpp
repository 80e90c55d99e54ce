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

/// A parameterised gate sequence whose composition is the identity on
/// all 2^width vectors. Matching more than half of it (cyclically,
/// forward or reversed, under an injective line substitution) lets the
/// matched gates be replaced by the reversed remainder.
struct Template {
  unsigned width = 0;
  std::vector<Gate> gates;
  std::string name;

  std::size_t size() const { return gates.size(); }
};

/// Checked identity plus the no-adjacent-duplicate rule (duplicate
/// pairs of size two are the deletion rule and are admitted as such).
/// Throws std::invalid_argument on a template failing either check.
void validate_template(const Template& tmpl);

/// Duplicate-pair templates for the three gate shapes plus a small
/// library of short NCT identities. All machine-checked.
std::vector<Template> default_templates();

enum class Pass : unsigned { Deletion = 1, Moving = 2, TemplateMatch = 4 };

struct OptConfig {
  unsigned passes = static_cast<unsigned>(Pass::Deletion) | static_cast<unsigned>(Pass::Moving) |
                    static_cast<unsigned>(Pass::TemplateMatch);
  std::vector<Template> templates = default_templates();
  unsigned max_iterations = 64;

  bool enabled(Pass p) const { return passes & static_cast<unsigned>(p); }
  static OptConfig all();
  static OptConfig only(unsigned passes);
};

/// Sufficient commutation condition: adjacent gates may be swapped when
/// neither target lies in the other's controls.
bool can_swap(const Gate& g1, const Gate& g2);

/// Removes adjacent identical pairs until none remain. Idempotent.
Circuit deletion_pass(const Circuit& circuit);

/// Applies the enabled passes to a fixpoint (or max_iterations). The
/// result computes the same permutation and never has more gates.
Circuit optimize(const Circuit& circuit, const OptConfig& config = OptConfig());

}  // namespace revseq
