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

#include <cmath>
#include <random>

#include "revseq/corpus.hpp"
#include "revseq/cost.hpp"
#include "revseq/report.hpp"

using namespace revseq;

TEST_CASE("count_report on the corpus spot values") {
  SUBCASE("t-d3: one Toffoli, two garbage lines") {
    const CostReport r = count_report(build_design({Family::T, Variant::D3}));
    CHECK(r.total == 1);
    CHECK(r.toffoli_count == 1);
    CHECK(r.garbage == 2);
    CHECK(weighted_cost(r, CostModel::phase_cnot()) == 5);
    CHECK(weighted_cost(r, CostModel::nct()) == 1);
  }
  SUBCASE("d-d2: four gates, three garbage lines") {
    const CostReport r = count_report(build_design({Family::D, Variant::D2}));
    CHECK(r.total == 4);
    CHECK(r.garbage == 3);
  }
  SUBCASE("sr-d1: nine gates, six of them Toffolis, weighted 33") {
    const CostReport r = count_report(build_design({Family::SR, Variant::D1}));
    CHECK(r.total == 9);
    CHECK(r.toffoli_count == 6);
    CHECK(weighted_cost(r, CostModel::phase_cnot()) == 33);
  }
}

TEST_CASE("an empty circuit with no outputs is all garbage") {
  SequentialCircuit seq;
  seq.body = Circuit(3);
  for (Line l = 0; l < 3; ++l) seq.input_lines["i" + std::to_string(l)] = l;
  const CostReport r = count_report(seq);
  CHECK(r.total == 0);
  CHECK(r.garbage == 3);
}

TEST_CASE("restored constants are not garbage") {
  // Compute-copy-uncompute: the ancilla returns to zero and only the
  // copy target stays live.
  SequentialCircuit seq;
  seq.body = Circuit(4, {Gate::toffoli(0, 1, 2), Gate::cnot(2, 3), Gate::toffoli(0, 1, 2)},
                     {"a", "b", "anc", "res"});
  seq.input_lines["a"] = 0;
  seq.input_lines["b"] = 1;
  seq.constant_lines[2] = false;
  seq.constant_lines[3] = false;
  seq.output_lines["res"] = 3;
  const auto roles = classify_lines(seq);
  CHECK(roles[0] == LineRole::Garbage);
  CHECK(roles[1] == LineRole::Garbage);
  CHECK(roles[2] == LineRole::RestoredConstant);
  CHECK(roles[3] == LineRole::PrimaryOutput);
  CHECK(count_report(seq).garbage == 2);
}

TEST_CASE("every line is exactly one of output, feedback, restored or garbage") {
  for (DesignId id : all_designs()) {
    CAPTURE(id.name());
    const SequentialCircuit seq = build_design(id);
    const auto roles = classify_lines(seq);
    std::size_t outputs = 0, feedback = 0, restored = 0, garbage = 0;
    for (LineRole role : roles) {
      switch (role) {
        case LineRole::PrimaryOutput: ++outputs; break;
        case LineRole::Feedback: ++feedback; break;
        case LineRole::RestoredConstant: ++restored; break;
        case LineRole::Garbage: ++garbage; break;
      }
    }
    CHECK(outputs + feedback + restored + garbage == seq.body.width());
    CHECK(garbage == count_report(seq).garbage);
  }
}

TEST_CASE("phase-cnot weighted cost equals total plus four per Toffoli") {
  SUBCASE("corpus designs") {
    for (DesignId id : all_designs()) {
      const CostReport r = count_report(build_design(id));
      CHECK(weighted_cost(r, CostModel::phase_cnot()) == r.total + 4 * r.toffoli_count);
      CHECK(weighted_cost(r, CostModel::nct()) == r.total);
    }
  }
  SUBCASE("random circuits") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<Line> line(0, 4);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> count(0, 30);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Gate> gates;
      for (int i = 0, n = count(rng); i < n; ++i) {
        Line t = line(rng), c0 = line(rng), c1 = line(rng);
        switch (kind(rng)) {
          case 0: gates.push_back(Gate::not_gate(t)); break;
          case 1:
            while (t == c0) t = line(rng);
            gates.push_back(Gate::cnot(c0, t));
            break;
          default:
            while (c1 == c0) c1 = line(rng);
            while (t == c0 || t == c1) t = line(rng);
            gates.push_back(Gate::toffoli(c0, c1, t));
            break;
        }
      }
      SequentialCircuit seq;
      seq.body = Circuit(5, std::move(gates));
      for (Line l = 0; l < 5; ++l) seq.input_lines["i" + std::to_string(l)] = l;
      const CostReport r = count_report(seq);
      CHECK(weighted_cost(r, CostModel::phase_cnot()) == r.total + 4 * r.toffoli_count);
    }
  }
}

TEST_CASE("published table pairs: consistency flags") {
  // Pairs that satisfy weighted = gates + 4 x Toffoli for an integer
  // Toffoli count are consistent; the master-slave D rows are not.
  const char* consistent[] = {"sr-d1", "d-d1", "jk-d1", "t-d1", "msd-d1",
                              "msjk-d1", "sr-d2", "msjk-d2", "msjk-d3"};
  for (const char* name : consistent) {
    CAPTURE(name);
    CHECK(paper_reference(*design_from_string(name)).consistent());
  }
  CHECK_FALSE(paper_reference(*design_from_string("msd-d2")).consistent());
  CHECK_FALSE(paper_reference(*design_from_string("msd-d3")).consistent());

  // The same check flags one of the earlier proposals' rows.
  for (const auto& [name, ref] : external_references(Family::SR))
    if (name == "thapliyal") CHECK_FALSE(ref.consistent());
  for (const auto& [name, ref] : external_references(Family::MSJK))
    if (name == "thapliyal") CHECK(ref.consistent());
}

TEST_CASE("exact optimization complexity estimates") {
  const ComplexityEstimate a = exact_opt_complexity(3, 1, 3);
  REQUIRE(a.tau.has_value());
  CHECK(*a.tau == 1728);
  CHECK(a.log2_tau == doctest::Approx(10.7549).epsilon(1e-4));

  const ComplexityEstimate b = exact_opt_complexity(1, 5, 1);
  REQUIRE(b.tau.has_value());
  CHECK(*b.tau == 4);
  CHECK(b.log2_tau == doctest::Approx(2.0));

  const ComplexityEstimate c = exact_opt_complexity(4, 2, 3);
  CHECK(c.log2_tau == doctest::Approx(20.0));

  // Far past 63 bits the linear value is not materialised.
  CHECK_FALSE(exact_opt_complexity(12, 40, 3).tau.has_value());
  CHECK_THROWS_AS(exact_opt_complexity(0, 1, 1), std::invalid_argument);
}

TEST_CASE("complexity is monotone in each argument for n >= 2") {
  for (unsigned n = 2; n <= 11; ++n)
    for (unsigned m = 1; m <= 10; ++m)
      for (unsigned l = 1; l <= 2; ++l) {
        const double base = exact_opt_complexity(n, m, l).log2_tau;
        CHECK(exact_opt_complexity(n + 1, m, l).log2_tau >= base);
        CHECK(exact_opt_complexity(n, m + 1, l).log2_tau >= base);
        CHECK(exact_opt_complexity(n, m, l + 1).log2_tau >= base);
      }
}
