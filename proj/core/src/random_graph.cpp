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

#include "forestaug/random_graph.hpp"

#include <algorithm>
#include <numeric>

namespace forestaug {

Digraph random_digraph(int n, int m, std::mt19937_64& rng) {
  if (n < 2 && m > 0) throw InputError("need n >= 2 to place arcs");
  Digraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_arc(u, v);
  }
  return g;
}

Digraph random_backbone_digraph(int n, int m, std::mt19937_64& rng) {
  if (n < 2) throw InputError("backbone graphs need n >= 2");
  if (m < n) throw InputError("backbone graphs need m >= n");
  Digraph g(n);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < n; ++i) g.add_arc(order[i], order[(i + 1) % n]);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = n; i < m; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_arc(u, v);
  }
  return g;
}

UGraph random_ugraph(int n, int m, std::mt19937_64& rng) {
  if (n < 2 && m > 0) throw InputError("need n >= 2 to place edges");
  UGraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_edge(u, v);
  }
  return g;
}

UGraph random_connected_ugraph(int n, int m, std::mt19937_64& rng) {
  if (n < 1) throw InputError("need at least one vertex");
  if (m < n - 1) throw InputError("connected graphs need m >= n - 1");
  UGraph g(n);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> anchor(0, i - 1);
    g.add_edge(order[i], order[anchor(rng)]);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = n - 1; i < m; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace forestaug
