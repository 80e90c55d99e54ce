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

#include <benchmark/benchmark.h>

#include <random>

#include "revseq/corpus.hpp"
#include "revseq/optimize.hpp"
#include "revseq/simulate.hpp"
#include "revseq/synthesize.hpp"

using namespace revseq;

namespace {

Circuit random_circuit(std::mt19937& rng, unsigned width, unsigned gates) {
  std::uniform_int_distribution<Line> line(0, width - 1);
  std::vector<Gate> out;
  for (unsigned i = 0; i < gates; ++i) {
    Line c0 = line(rng), c1 = line(rng), t = line(rng);
    while (c1 == c0) c1 = line(rng);
    while (t == c0 || t == c1) t = line(rng);
    out.push_back(Gate::toffoli(c0, c1, t));
  }
  return Circuit(width, std::move(out));
}

void BM_Evaluate(benchmark::State& state) {
  std::mt19937 rng(1);
  const Circuit circuit = random_circuit(rng, static_cast<unsigned>(state.range(0)), 64);
  Bits v = 0;
  for (auto _ : state) {
    v = evaluate(circuit, v);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * circuit.size());
}
BENCHMARK(BM_Evaluate)->Arg(4)->Arg(8)->Arg(16);

void BM_PermutationOf(benchmark::State& state) {
  std::mt19937 rng(2);
  const Circuit circuit = random_circuit(rng, static_cast<unsigned>(state.range(0)), 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(permutation_of(circuit));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PermutationOf)->DenseRange(4, 14, 2);

void BM_Optimize(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<Circuit> circuits;
  for (int i = 0; i < 32; ++i)
    circuits.push_back(random_circuit(rng, 6, static_cast<unsigned>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize(circuits[i++ % circuits.size()]));
  }
}
BENCHMARK(BM_Optimize)->Arg(10)->Arg(20)->Arg(40);

void BM_SynthWidth3(benchmark::State& state) {
  std::mt19937 rng(4);
  Permutation p = Permutation::identity(3);
  const bool bidirectional = state.range(0) != 0;
  for (auto _ : state) {
    state.PauseTiming();
    std::shuffle(p.table.begin(), p.table.end(), rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(bidirectional ? synth_bidirectional(p) : synth_unidirectional(p));
  }
}
BENCHMARK(BM_SynthWidth3)->Arg(0)->Arg(1);

void BM_VerifyCorpus(benchmark::State& state) {
  const SequentialCircuit seq = build_design({Family::MSJK, Variant::D1});
  const NextStateSpec spec = flipflop_spec(Family::MSJK);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_design(seq, spec));
  }
}
BENCHMARK(BM_VerifyCorpus);

}  // namespace

BENCHMARK_MAIN();
