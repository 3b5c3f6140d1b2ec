// Copyright 2026 The Authors.
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

#include "benchmark/benchmark.h"
#include "latred/instances.h"
#include "latred/perturbation.h"
#include "latred/reduction.h"
#include "latred/solvers.h"

namespace latred {
namespace {

void BM_PerturbedReduction(benchmark::State& state) {
  const Family family = static_cast<Family>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Oracle f = GenerateInstance(family, n, 1);
  const LatticeStats stats = ComputeLatticeStats(*f, Lattice::Full(n));
  const double t = ScaleFromRatio(stats, 0.5);
  uint64_t seed = 0;
  for (auto _ : state) {
    const auto g = PerturbedOracle(f, DrawPerturbation(n, t, ++seed));
    benchmark::DoNotOptimize(Reduce(*g, Lattice::Full(n), Sense::kMaximize));
  }
  state.SetLabel(FamilyName(family));
}
BENCHMARK(BM_PerturbedReduction)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {50, 100}})
    ->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  const Family family = static_cast<Family>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Oracle f = GenerateInstance(family, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BranchAndBoundMax(f, Lattice::Full(n)));
  }
  state.SetLabel(FamilyName(family));
}
BENCHMARK(BM_BranchAndBound)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {16, 20}})
    ->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Oracle f = GenerateInstance(Family::kCut, n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForce(f, Sense::kMaximize));
  }
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace latred

BENCHMARK_MAIN();
