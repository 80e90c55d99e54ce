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

#include "revseq/report.hpp"

#include <sstream>

#include "revseq/optimize.hpp"

namespace revseq {

namespace {

struct FamilyRefs {
  PaperReference rice;
  PaperReference thapliyal;
  PaperReference d1, d2, d3;
};

// Published comparison tables: gate count and garbage per design, and
// the weighted count under the phase+CNOT library (Toffoli = 5).
FamilyRefs family_refs(Family family) {
  switch (family) {
    case Family::SR:
      return {{9, 7, 29}, {18, 8, 32}, {9, 6, 33}, {15, 6, 39}, {13, 6, 37}};
    case Family::D:
      return {{}, {23, 8, 55}, {10, 6, 34}, {4, 3, 12}, {3, 3, 11}};
    case Family::JK:
      return {{}, {26, 12, 58}, {13, 10, 45}, {19, 10, 51}, {17, 10, 49}};
    case Family::T:
      return {{}, {26, 12, 58}, {14, 10, 46}, {2, 2, 6}, {1, 2, 5}};
    case Family::MSD:
      return {{17, 12, 53}, {}, {20, 11, 68}, {9, 5, 19}, {7, 5, 17}};
    case Family::MSJK:
      return {{}, {54, 21, 126}, {23, 15, 79}, {37, 18, 93}, {33, 18, 89}};
  }
  return {};
}

}  // namespace

PaperReference paper_reference(DesignId id) {
  const FamilyRefs refs = family_refs(id.family);
  switch (id.variant) {
    case Variant::D1: return refs.d1;
    case Variant::D2: return refs.d2;
    case Variant::D3: return refs.d3;
  }
  return {};
}

std::vector<std::pair<std::string, PaperReference>> external_references(Family family) {
  const FamilyRefs refs = family_refs(family);
  std::vector<std::pair<std::string, PaperReference>> out;
  if (refs.rice.gates) out.emplace_back("rice", refs.rice);
  if (refs.thapliyal.gates) out.emplace_back("thapliyal", refs.thapliyal);
  return out;
}

std::vector<DesignReportRow> corpus_report() {
  std::vector<DesignReportRow> rows;
  for (DesignId id : all_designs()) {
    SequentialCircuit seq = build_design(id);
    // Achieved counts are taken after local optimization.
    SequentialCircuit opt = seq;
    opt.body = optimize(seq.body);

    DesignReportRow row;
    row.id = id;
    const DesignInfo info = design_info(id);
    row.provenance = info.provenance;
    row.note = info.note;
    row.lines = opt.body.width();
    const CostReport cost = count_report(opt);
    row.gates = cost.total;
    row.toffoli = cost.toffoli_count;
    row.garbage = cost.garbage;
    row.weighted_phase = weighted_cost(cost, CostModel::phase_cnot());
    row.paper = paper_reference(id);

    const VerificationReport verdict = verify_design(opt, flipflop_spec(id.family));
    row.verified = verdict.pass;
    row.cases_checked = verdict.cases_checked;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string opt_str(std::optional<unsigned> v) { return v ? std::to_string(*v) : "-"; }

std::string flags_for(const DesignReportRow& row) {
  std::string flags;
  auto append = [&](const std::string& f) {
    if (!flags.empty()) flags += ' ';
    flags += f;
  };
  if (!row.verified) append("VERIFY-FAIL");
  if (row.paper.gates) {
    if (row.gates == *row.paper.gates)
      append("gates=paper");
    else if (row.gates < *row.paper.gates)
      append("gates<paper");
    else
      append("GATES>PAPER");
  }
  if (row.paper.garbage) {
    if (row.garbage == *row.paper.garbage)
      append("garbage=paper");
    else if (row.garbage < *row.paper.garbage)
      append("garbage<paper");
    else
      append("GARBAGE>PAPER");
  }
  if (!row.paper.consistent()) append("PAPER-TABLES-INCONSISTENT");
  return flags;
}

}  // namespace

std::string render_report(const std::vector<DesignReportRow>& rows, ReportFormat format) {
  std::ostringstream out;
  const char* headers[] = {"design",      "provenance",     "lines",    "gates",
                           "gates_paper", "toffoli",        "garbage",  "garbage_paper",
                           "weighted",    "weighted_paper", "verified", "cases",
                           "flags",       "note"};

  auto provenance_str = [](Provenance p) {
    return p == Provenance::Prose ? std::string("prose") : std::string("reconstruction");
  };
  auto csv_safe = [](std::string s) {
    for (char& ch : s)
      if (ch == ',') ch = ';';
    return s;
  };

  if (format == ReportFormat::Csv) {
    for (std::size_t i = 0; i < std::size(headers); ++i)
      out << headers[i] << (i + 1 < std::size(headers) ? "," : "\n");
    for (const DesignReportRow& row : rows) {
      out << row.id.name() << ',' << provenance_str(row.provenance) << ',' << row.lines << ','
          << row.gates << ',' << opt_str(row.paper.gates) << ',' << row.toffoli << ','
          << row.garbage << ',' << opt_str(row.paper.garbage) << ',' << row.weighted_phase << ','
          << opt_str(row.paper.weighted) << ',' << (row.verified ? "pass" : "FAIL") << ','
          << row.cases_checked << ',' << flags_for(row) << ',' << csv_safe(row.note) << "\n";
    }
    for (Family f : {Family::SR, Family::D, Family::JK, Family::T, Family::MSD, Family::MSJK}) {
      for (const auto& [name, ref] : external_references(f)) {
        out << to_string(f) << "-" << name << ",reference,-,-," << opt_str(ref.gates) << ",-,-,"
            << opt_str(ref.garbage) << ",-," << opt_str(ref.weighted) << ",-,-,"
            << (ref.consistent() ? "" : "PAPER-TABLES-INCONSISTENT") << ",\n";
      }
    }
    return out.str();
  }

  out << "| design | provenance | lines | gates | gates (paper) | toffoli | garbage | garbage "
         "(paper) | weighted | weighted (paper) | verified | cases | flags | note |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const DesignReportRow& row : rows) {
    out << "| " << row.id.name() << " | " << provenance_str(row.provenance) << " | " << row.lines
        << " | " << row.gates << " | " << opt_str(row.paper.gates) << " | " << row.toffoli
        << " | " << row.garbage << " | " << opt_str(row.paper.garbage) << " | "
        << row.weighted_phase << " | " << opt_str(row.paper.weighted) << " | "
        << (row.verified ? "pass" : "FAIL") << " | " << row.cases_checked << " | "
        << flags_for(row) << " | " << row.note << " |\n";
  }
  for (Family f : {Family::SR, Family::D, Family::JK, Family::T, Family::MSD, Family::MSJK}) {
    for (const auto& [name, ref] : external_references(f)) {
      out << "| " << to_string(f) << "-" << name << " | reference | - | - | "
          << opt_str(ref.gates) << " | - | - | " << opt_str(ref.garbage) << " | - | "
          << opt_str(ref.weighted) << " | - | - | "
          << (ref.consistent() ? "" : "PAPER-TABLES-INCONSISTENT") << " |  |\n";
    }
  }
  return out.str();
}

}  // namespace revseq
