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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "forestaug/mincut.hpp"
#include "forestaug/random_graph.hpp"
#include "test_support.hpp"

using namespace forestaug;

namespace {

// Min cut by subset enumeration: smallest number of arcs entering a set
// that holds t but not s.
int enumerated_min_cut(const Digraph& g, VertexId s, VertexId t) {
  const int n = g.num_vertices();
  int best = g.num_arcs() + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> t & 1u) || (mask >> s & 1u)) continue;
    int cut = 0;
    for (const Arc& a : g.arcs()) {
      if ((mask >> a.head & 1u) && !(mask >> a.tail & 1u)) ++cut;
    }
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

TEST_CASE("max flow basics") {
  Digraph two(2);
  two.add_arc(0, 1);
  two.add_arc(0, 1);
  CHECK(max_flow_value(two, 0, 1, 10) == 2);

  Digraph c3 = testing::make_c3();
  CHECK(max_flow_value(c3, 0, 2, 10) == 1);

  UGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  CHECK(max_flow_value(doubled(tri), 0, 2, 2) == 2);

  CHECK_THROWS_AS(max_flow_value(two, 1, 1, 3), InputError);
}

TEST_CASE("capping never overshoots and matches the uncapped value") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 60; ++round) {
    Digraph g = random_digraph(6, 12, rng);
    int full = max_flow_value(g, 0, 5, g.num_arcs() + 1);
    for (int cap = 0; cap <= full + 2; ++cap) {
      CHECK(max_flow_value(g, 0, 5, cap) == std::min(full, cap));
    }
  }
}

TEST_CASE("max flow equals the enumerated min cut") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 120; ++round) {
    Digraph g = random_digraph(6, 14, rng);
    int flow = max_flow_value(g, 0, 5, g.num_arcs() + 1);
    CHECK(flow == enumerated_min_cut(g, 0, 5));
  }
  // Largest still-enumerable size.
  for (int round = 0; round < 60; ++round) {
    Digraph g = random_digraph(8, 20, rng);
    int flow = max_flow_value(g, 0, 7, g.num_arcs() + 1);
    CHECK(flow == enumerated_min_cut(g, 0, 7));
  }
}

TEST_CASE("strong connectivity values") {
  CHECK(strong_connectivity(testing::make_c3(), 3) == 1);

  Digraph both(3);  // triangle plus its reverse
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
    both.add_arc(u, v);
    both.add_arc(v, u);
  }
  CHECK(strong_connectivity(both, 3) == 2);

  CHECK(strong_connectivity(Digraph(2), 3) == 0);
  CHECK(strong_connectivity(Digraph(1), 4) == 4);  // single vertex
}

TEST_CASE("(k,s)-connectivity checks") {
  // Triangle with a special node linked both ways to every vertex.
  Digraph gx(4);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}}) gx.add_arc(u, v);
  for (VertexId v = 0; v < 3; ++v) {
    gx.add_arc(3, v);
    gx.add_arc(v, 3);
  }
  CHECK(is_ks_connected(gx, 3, 2));

  Digraph isolated(4);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}}) isolated.add_arc(u, v);
  CHECK_FALSE(is_ks_connected(isolated, 3, 2));
  CHECK(is_ks_connected(isolated, 3, 0));  // vacuous
}

TEST_CASE("concurrent flow computations over one shared graph") {
  std::mt19937_64 rng(23);
  Digraph g = random_backbone_digraph(40, 200, rng);
  std::vector<int> expect(g.num_vertices());
  for (VertexId v = 1; v < g.num_vertices(); ++v) {
    expect[v] = max_flow_value(g, 0, v, 8);
  }
  std::vector<int> got(g.num_vertices(), 0);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (VertexId v = 1 + t; v < g.num_vertices(); v += 4) {
        got[v] = max_flow_value(g, 0, v, 8);
      }
    });
  }
  for (auto& w : workers) w.join();
  for (VertexId v = 1; v < g.num_vertices(); ++v) {
    CHECK(got[v] == expect[v]);
  }
}

TEST_CASE("edge connectivity via doubling") {
  UGraph p3 = testing::make_p3();
  CHECK(edge_connectivity(p3, 3) == 1);
  UGraph c4(4);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0}}) c4.add_edge(u, v);
  CHECK(edge_connectivity(c4, 3) == 2);
}
