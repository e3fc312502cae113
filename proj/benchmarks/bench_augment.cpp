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

#include "forestaug/directed_augment.hpp"
#include "forestaug/random_graph.hpp"
#include "forestaug/undirected_augment.hpp"

using namespace forestaug;

namespace {

void BM_AugmentDirected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::mt19937_64 rng(2024);
  Digraph g = random_backbone_digraph(n, 5 * n, rng);
  long long gamma = 0;
  for (auto _ : state) {
    DirectedAugmentResult r = augment_directed(g, k);
    gamma = r.gamma;
    benchmark::DoNotOptimize(r.gamma);
  }
  state.counters["gamma"] = static_cast<double>(gamma);
}

void BM_AugmentUndirected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::mt19937_64 rng(2025);
  UGraph g = random_connected_ugraph(n, 2 * n, rng);
  for (auto _ : state) {
    UndirectedAugmentResult r = augment_undirected(g, k);
    benchmark::DoNotOptimize(r.gamma);
  }
}

}  // namespace

BENCHMARK(BM_AugmentDirected)
    ->Args({100, 3})
    ->Args({500, 5})
    ->Args({1000, 5})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(BM_AugmentUndirected)->Args({100, 3})->Args({300, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
