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
#include <string>
#include <vector>

#include "revseq/corpus.hpp"
#include "revseq/cost.hpp"

namespace revseq {

/// Published gate count, garbage count and phase+CNOT weighted count
/// for one design (or one of the earlier proposals being compared).
struct PaperReference {
  std::optional<unsigned> gates;
  std::optional<unsigned> garbage;
  std::optional<unsigned> weighted;

  /// Whether the two published tables agree under the weighted =
  /// gates + 4 x Toffoli identity with a plausible Toffoli count.
  bool consistent() const {
    if (!gates || !weighted) return true;
    if (*weighted < *gates) return false;
    const unsigned diff = *weighted - *gates;
    return diff % 4 == 0 && diff / 4 <= *gates;
  }
};

PaperReference paper_reference(DesignId id);

/// Reference values for the earlier proposals the tables compare
/// against ("rice" and "thapliyal"), where published.
std::vector<std::pair<std::string, PaperReference>> external_references(Family family);

struct DesignReportRow {
  DesignId id;
  Provenance provenance;
  std::string note;
  unsigned lines = 0;
  std::size_t gates = 0;
  std::size_t toffoli = 0;
  std::size_t garbage = 0;
  std::uint64_t weighted_phase = 0;
  PaperReference paper;
  bool verified = false;
  std::size_t cases_checked = 0;
};

/// Builds, optimizes, verifies and costs every corpus design.
std::vector<DesignReportRow> corpus_report();

enum class ReportFormat { Csv, Markdown };

std::string render_report(const std::vector<DesignReportRow>& rows, ReportFormat format);

}  // namespace revseq
