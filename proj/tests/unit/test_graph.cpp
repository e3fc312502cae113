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

#include <random>

#include "forestaug/graph.hpp"
#include "forestaug/random_graph.hpp"
#include "test_support.hpp"

using namespace forestaug;
using testing::make_c3;

TEST_CASE("boundary classes on the directed triangle") {
  Digraph g = make_c3();
  VertexSet a = VertexSet::of(3, {0});
  CHECK(boundary(g, a, Boundary::Entering) == std::vector<EdgeId>{2});
  CHECK(boundary(g, a, Boundary::Leaving) == std::vector<EdgeId>{0});
  CHECK(boundary(g, a, Boundary::Internal).empty());

  VertexSet two = VertexSet::of(3, {0, 1});
  CHECK(boundary(g, two, Boundary::Internal) == std::vector<EdgeId>{0});
}

TEST_CASE("boundary of the empty and full set is empty") {
  Digraph g = make_c3();
  CHECK(boundary(g, VertexSet(3), Boundary::Entering).empty());
  CHECK(boundary(g, VertexSet::of(3, {0, 1, 2}), Boundary::Entering).empty());
  CHECK(boundary(g, VertexSet::of(3, {0, 1, 2}), Boundary::Leaving).empty());
}

TEST_CASE("reverse flips arcs and is an involution") {
  Digraph g = make_c3();
  Digraph r = g.reversed();
  CHECK(r.arc(0) == Arc{1, 0});
  CHECK(r.arc(1) == Arc{2, 1});
  CHECK(r.arc(2) == Arc{0, 2});
  CHECK(r.reversed() == g);

  Digraph single(2);
  single.add_arc(0, 1);
  CHECK(single.reversed().arc(0) == Arc{1, 0});
}

TEST_CASE("doubling an undirected graph") {
  UGraph one(2);
  one.add_edge(0, 1);
  Digraph d = doubled(one);
  CHECK(d.num_arcs() == 2);
  CHECK(d.arc(0) == Arc{0, 1});
  CHECK(d.arc(1) == Arc{1, 0});

  UGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  CHECK(doubled(tri).num_arcs() == 6);

  // In-boundary of the doubled graph matches the undirected cut.
  UGraph p3 = testing::make_p3();
  VertexSet a = VertexSet::of(3, {0});
  CHECK(cut_size(p3, a) == 1);
  CHECK(boundary_size(doubled(p3), a, Boundary::Entering) == 1);
}

TEST_CASE("doubled boundary equals undirected cut on random graphs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    UGraph g = random_ugraph(6, 9, rng);
    Digraph d = doubled(g);
    std::uniform_int_distribution<int> bit(0, 1);
    VertexSet a(6);
    for (VertexId v = 0; v < 6; ++v) {
      if (bit(rng)) a.insert(v);
    }
    CHECK(boundary_size(d, a, Boundary::Entering) == cut_size(g, a));
    CHECK(boundary_size(d, a, Boundary::Leaving) == cut_size(g, a));
  }
}

TEST_CASE("boundary classes partition the arcs touching a set") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    Digraph g = random_digraph(7, 15, rng);
    std::uniform_int_distribution<int> bit(0, 1);
    VertexSet a(7);
    for (VertexId v = 0; v < 7; ++v) {
      if (bit(rng)) a.insert(v);
    }
    int entering = 0, leaving = 0, internal = 0, untouched = 0;
    for (const Arc& arc : g.arcs()) {
      bool t = a.contains(arc.tail), h = a.contains(arc.head);
      if (t && h) {
        ++internal;
      } else if (t) {
        ++leaving;
      } else if (h) {
        ++entering;
      } else {
        ++untouched;
      }
    }
    CHECK(boundary_size(g, a, Boundary::Entering) == entering);
    CHECK(boundary_size(g, a, Boundary::Leaving) == leaving);
    CHECK(boundary_size(g, a, Boundary::Internal) == internal);
    CHECK(entering + leaving + internal + untouched == g.num_arcs());
    // Pure: repeated calls agree.
    CHECK(boundary(g, a, Boundary::Entering) ==
          boundary(g, a, Boundary::Entering));
  }
}

TEST_CASE("internal counts over a partition add up to m") {
  std::mt19937_64 rng(13);
  Digraph g = random_digraph(8, 18, rng);
  std::uniform_int_distribution<int> part(0, 2);
  std::vector<int> side(8);
  for (auto& s : side) s = part(rng);
  int internal_total = 0;
  for (int p = 0; p <= 2; ++p) {
    VertexSet a(8);
    for (VertexId v = 0; v < 8; ++v) {
      if (side[v] == p) a.insert(v);
    }
    internal_total += boundary_size(g, a, Boundary::Internal);
  }
  int crossing = 0;
  for (const Arc& arc : g.arcs()) {
    if (side[arc.tail] != side[arc.head]) ++crossing;
  }
  CHECK(internal_total + crossing == g.num_arcs());
}

TEST_CASE("graph construction rejects bad input") {
  Digraph g(3);
  CHECK_THROWS_AS(g.add_arc(0, 0), InputError);
  CHECK_THROWS_AS(g.add_arc(0, 3), InputError);
  CHECK_THROWS_AS(g.add_arc(-1, 1), InputError);
  UGraph u(2);
  CHECK_THROWS_AS(u.add_edge(1, 1), InputError);
}
