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

#include "revseq/simulate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "revseq/bits.hpp"

namespace revseq {

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] != i) return false;
  return true;
}

bool Permutation::is_valid() const {
  if (width > max_enum_width) return false;
  const std::size_t n = std::size_t{1} << width;
  if (table.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::uint32_t v : table) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation Permutation::identity(unsigned width) {
  Permutation p;
  p.width = width;
  p.table.resize(std::size_t{1} << width);
  for (std::size_t i = 0; i < p.table.size(); ++i) p.table[i] = static_cast<std::uint32_t>(i);
  return p;
}

Bits apply_gate(const Gate& gate, Bits bits, unsigned width) {
  if (gate.max_line() >= width)
    throw std::out_of_range("gate touches a line outside the vector width");
  const Bits cmask = gate.control_mask();
  if ((bits & cmask) == cmask) bits ^= gate.target_mask();
  return bits;
}

Bits evaluate(const Circuit& circuit, Bits bits) {
  if (circuit.width() < bits::max_width && bits >> circuit.width())
    throw std::out_of_range("bit vector wider than the circuit");
  for (const Gate& g : circuit.gates()) {
    const Bits cmask = g.control_mask();
    if ((bits & cmask) == cmask) bits ^= g.target_mask();
  }
  return bits;
}

Permutation permutation_of(const Circuit& circuit) {
  require_valid(circuit);
  if (circuit.width() > max_enum_width)
    throw std::invalid_argument("width over the exhaustive enumeration cap (24)");
  Permutation p;
  p.width = circuit.width();
  const std::size_t n = std::size_t{1} << circuit.width();
  p.table.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    p.table[i] = static_cast<std::uint32_t>(evaluate(circuit, static_cast<Bits>(i)));
  return p;
}

BijectivityReport check_bijective(const std::vector<TableRow>& rows, unsigned width) {
  if (width > bits::max_width) throw std::invalid_argument("width over the 64-line limit");
  const Bits limit_mask = width == bits::max_width ? ~Bits{0} : (Bits{1} << width) - 1;
  std::unordered_set<Bits> inputs;
  for (const TableRow& row : rows) {
    if ((row.input & ~limit_mask) || (row.output & ~limit_mask))
      throw std::invalid_argument("table row wider than the declared width");
    if (!inputs.insert(row.input).second)
      throw std::invalid_argument("duplicate input row " + bits::format(row.input, width));
  }

  BijectivityReport report;
  std::map<Bits, std::vector<Bits>> by_output;
  for (const TableRow& row : rows) by_output[row.output].push_back(row.input);
  for (auto& [output, ins] : by_output) {
    if (ins.size() < 2) continue;
    std::sort(ins.begin(), ins.end());
    for (std::size_t i = 0; i < ins.size(); ++i)
      for (std::size_t j = i + 1; j < ins.size(); ++j)
        report.collisions.push_back({ins[i], ins[j], output});
  }
  report.is_bijective = report.collisions.empty();
  return report;
}

BijectivityReport check_bijective(const Permutation& perm) {
  std::vector<TableRow> rows;
  rows.reserve(perm.table.size());
  for (std::size_t i = 0; i < perm.table.size(); ++i)
    rows.push_back({static_cast<Bits>(i), static_cast<Bits>(perm.table[i])});
  return check_bijective(rows, perm.width);
}

}  // namespace revseq
