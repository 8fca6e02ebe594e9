/*
 * Copyright 2026 The causal_decomp Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "causal_decomp/cellular_automaton.h"
#include "causal_decomp/decomposition.h"
#include "causal_decomp/gates.h"
#include "causal_decomp/lattice.h"
#include "causal_decomp/oracle.h"

namespace causal_decomp {
namespace {

void BM_BuildLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RedundancyLattice::Build(n));
  }
}
BENCHMARK(BM_BuildLattice)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

// Full inversion including the Möbius columns, on a fresh lattice each time.
void BM_InvertColdLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SubsetTable table(n);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    table.Set(VariableSet::FromBits(s), std::popcount(s) + u(rng));
  }
  for (auto _ : state) {
    auto lattice = RedundancyLattice::Build(n);
    benchmark::DoNotOptimize(Invert(RedundantMeasure(lattice, table)));
  }
}
BENCHMARK(BM_InvertColdLattice)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_InvertWarmLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto lattice = RedundancyLattice::Build(n);
  SubsetTable table(n);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    table.Set(VariableSet::FromBits(s), std::popcount(s));
  }
  const MeasureTable measure = RedundantMeasure(lattice, table);
  Invert(measure);  // fills the Möbius cache
  for (auto _ : state) {
    benchmark::DoNotOptimize(Invert(measure));
  }
}
BENCHMARK(BM_InvertWarmLattice)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_MaceTable(benchmark::State& state) {
  const CaModel model(110, PriorKind::kMaxEnt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaceTable(model));
  }
}
BENCHMARK(BM_MaceTable);

void BM_EstimateCaPrior(benchmark::State& state) {
  const SimulationParams params{100, static_cast<int>(state.range(0)), 500};
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EstimateCaPrior(30, Initialization::kRandom, params, seed++));
  }
  state.SetItemsProcessed(state.iterations() * params.cells * params.steps);
}
BENCHMARK(BM_EstimateCaPrior)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace causal_decomp

// Defined here rather than linking benchmark_main, whose packaged archive
// carries LTO bytecode from a different compiler release.
BENCHMARK_MAIN();
