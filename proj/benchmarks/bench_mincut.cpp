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

#include "forestaug/mincut.hpp"
#include "forestaug/random_graph.hpp"

using namespace forestaug;

namespace {

void BM_CappedMaxFlow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int cap = static_cast<int>(state.range(1));
  std::mt19937_64 rng(99);
  Digraph g = random_backbone_digraph(n, 5 * n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_flow_value(g, 0, n / 2, cap));
  }
}

void BM_StrongConnectivity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(77);
  Digraph g = random_backbone_digraph(n, 5 * n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(strong_connectivity(g, 5));
  }
}

}  // namespace

BENCHMARK(BM_CappedMaxFlow)->Args({500, 5})->Args({2000, 5});
BENCHMARK(BM_StrongConnectivity)->Arg(200)->Arg(1000)
    ->Unit(benchmark::kMillisecond);
