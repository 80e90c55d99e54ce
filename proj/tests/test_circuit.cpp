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

#include <doctest.h>

#include <random>

#include "revseq/circuit.hpp"
#include "revseq/simulate.hpp"

using namespace revseq;

namespace {

Circuit random_circuit(std::mt19937& rng, unsigned max_width = 6, unsigned max_gates = 20) {
  std::uniform_int_distribution<unsigned> width_dist(1, max_width);
  const unsigned width = width_dist(rng);
  std::uniform_int_distribution<unsigned> count_dist(0, max_gates);
  std::uniform_int_distribution<Line> line_dist(0, width - 1);
  std::uniform_int_distribution<int> kind_dist(0, width >= 3 ? 2 : (width >= 2 ? 1 : 0));

  std::vector<Gate> gates;
  const unsigned count = count_dist(rng);
  for (unsigned i = 0; i < count; ++i) {
    switch (kind_dist(rng)) {
      case 0: gates.push_back(Gate::not_gate(line_dist(rng))); break;
      case 1: {
        Line c = line_dist(rng), t = line_dist(rng);
        while (t == c) t = line_dist(rng);
        gates.push_back(Gate::cnot(c, t));
        break;
      }
      default: {
        Line c0 = line_dist(rng), c1 = line_dist(rng), t = line_dist(rng);
        while (c1 == c0) c1 = line_dist(rng);
        while (t == c0 || t == c1) t = line_dist(rng);
        gates.push_back(Gate::toffoli(c0, c1, t));
        break;
      }
    }
  }
  return Circuit(width, std::move(gates));
}

}  // namespace

TEST_CASE("gate equality ignores control order") {
  CHECK(Gate::toffoli(1, 0, 2) == Gate::toffoli(0, 1, 2));
  CHECK(Gate::cnot(0, 1) != Gate::cnot(1, 0));
  CHECK(Gate::not_gate(0) != Gate::not_gate(1));
}

TEST_CASE("validate accepts a well-formed Toffoli circuit") {
  Circuit c(3, {Gate::toffoli(0, 1, 2)});
  CHECK(validate(c).empty());
}

TEST_CASE("validate flags target in controls") {
  Circuit c(2, {Gate::toffoli(0, 1, 1)});
  Diagnostics diags = validate(c);
  REQUIRE_FALSE(diags.ok());
  CHECK(diags.items.front().message == "target in controls");
  CHECK(diags.items.front().gate_index == 0);
}

TEST_CASE("validate flags out-of-range lines") {
  Circuit c(2, {Gate::cnot(3, 0)});
  Diagnostics diags = validate(c);
  REQUIRE_FALSE(diags.ok());
  CHECK(diags.items.front().message == "line index out of range");
  CHECK(diags.items.front().gate_index == 0);
}

TEST_CASE("validate flags duplicate line names") {
  Circuit c(2, {}, {"a", "a"});
  CHECK_FALSE(validate(c).ok());
}

TEST_CASE("validate is total on malformed gate combinations") {
  Circuit c(2, {Gate::toffoli(5, 5, 5), Gate::cnot(9, 9)});
  Diagnostics diags = validate(c);
  CHECK_FALSE(diags.ok());
  CHECK(diags.items.size() >= 3);
}

TEST_CASE("inverse reverses the gate list") {
  Circuit c(2, {Gate::not_gate(0), Gate::cnot(0, 1)});
  Circuit inv = inverse(c);
  REQUIRE(inv.size() == 2);
  CHECK(inv.gates()[0] == Gate::cnot(0, 1));
  CHECK(inv.gates()[1] == Gate::not_gate(0));
  CHECK(inverse(Circuit(3)).empty());
}

TEST_CASE("inverse rejects invalid circuits") {
  CHECK_THROWS_AS(inverse(Circuit(1, {Gate::cnot(0, 1)})), std::invalid_argument);
}

TEST_CASE("circuit followed by its inverse is the identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = random_circuit(rng);
    const Circuit round_trip = concatenate(c, inverse(c));
    const Bits all = (Bits{1} << c.width()) - 1;
    for (Bits v = 0; v <= all; ++v) CHECK(evaluate(round_trip, v) == v);
  }
}
