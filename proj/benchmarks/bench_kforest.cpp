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

#include <benchmark/benchmark.h>

#include <random>

#include "forestaug/kforest.hpp"
#include "forestaug/random_graph.hpp"

using namespace forestaug;

namespace {

void BM_SolveKForest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  std::mt19937_64 rng(12345);
  Digraph g = random_backbone_digraph(n, m, rng);
  SolveStats stats;
  for (auto _ : state) {
    ForestLabeling f = solve_kforest(g, k, IndegreeReserve::none(), {}, &stats);
    benchmark::DoNotOptimize(f.size());
  }
  state.counters["edges_covered"] = static_cast<double>(
      solve_kforest(g, k).size());
  state.counters["final_rounds"] = static_cast<double>(
      stats.rounds_per_level.empty() ? 0 : stats.rounds_per_level.back());
}

void BM_AugmentingSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4321);
  Digraph g = random_backbone_digraph(n, 5 * n, rng);
  ForestLabeling f = solve_kforest(g, 3);
  PathSearcher searcher(f);
  // Optimal labeling: every search fails, exercising full exploration.
  for (auto _ : state) {
    for (VertexId v = 0; v < n; ++v) {
      if (f.deficit(v) > 0) benchmark::DoNotOptimize(searcher.from(v));
    }
  }
}

}  // namespace

BENCHMARK(BM_SolveKForest)
    ->Args({100, 500, 3})
    ->Args({500, 2500, 3})
    ->Args({1000, 5000, 5})
    ->Args({2000, 10000, 5})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(BM_AugmentingSearch)->Arg(200)->Arg(1000);
