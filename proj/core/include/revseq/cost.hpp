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
#include <optional>
#include <vector>

#include "revseq/sequential.hpp"

namespace revseq {

/// The two gate libraries used for comparison: plain NCT counting, and
/// the phase+CNOT library in which a Toffoli costs five gates.
enum class CostModelKind { NctCount, PhaseCnot };

struct CostModel {
  CostModelKind kind = CostModelKind::NctCount;

  unsigned weight(GateKind gate) const {
    if (kind == CostModelKind::PhaseCnot && gate == GateKind::Toffoli) return 5;
    return 1;
  }
  static CostModel nct() { return {CostModelKind::NctCount}; }
  static CostModel phase_cnot() { return {CostModelKind::PhaseCnot}; }
};

/// What each output-side line carries after a step. Feedback lines are
/// consumed by the state wiring; a restored constant is a constant
/// line whose output provably equals its input constant over every
/// reachable input. Everything else is garbage.
enum class LineRole { PrimaryOutput, Feedback, RestoredConstant, Garbage };

std::vector<LineRole> classify_lines(const SequentialCircuit& seq);

struct CostReport {
  std::size_t not_count = 0;
  std::size_t cnot_count = 0;
  std::size_t toffoli_count = 0;
  std::size_t total = 0;
  std::size_t garbage = 0;

  std::size_t count(GateKind kind) const {
    switch (kind) {
      case GateKind::Not: return not_count;
      case GateKind::Cnot: return cnot_count;
      case GateKind::Toffoli: return toffoli_count;
    }
    return 0;
  }
};

CostReport count_report(const SequentialCircuit& seq);

/// Sum of weight(kind) x count(kind). Under the phase+CNOT model this
/// equals total + 4 x Toffoli count.
std::uint64_t weighted_cost(const CostReport& report, const CostModel& model);

/// Eq. form: tau = 2^(2n) * n^(l*m), kept in log2 to avoid overflow.
/// The linear value is materialised only when it fits in 63 bits.
struct ComplexityEstimate {
  unsigned n = 1;
  unsigned m = 0;
  unsigned l = 1;
  double log2_tau = 0.0;
  std::optional<std::uint64_t> tau;
};

ComplexityEstimate exact_opt_complexity(unsigned n, unsigned m, unsigned l);

}  // namespace revseq
