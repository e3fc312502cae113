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
#include <string>

#include "forestaug/io.hpp"
#include "test_support.hpp"

using namespace forestaug;

TEST_CASE("parsing the documented examples") {
  auto c3 = parse_graph("3 3 directed\n1 2\n2 3\n3 1\n");
  REQUIRE(std::holds_alternative<Digraph>(c3));
  CHECK(std::get<Digraph>(c3) == testing::make_c3());

  auto lone = parse_graph("1 0 directed");
  CHECK(std::get<Digraph>(lone).num_vertices() == 1);
  CHECK(std::get<Digraph>(lone).num_arcs() == 0);

  auto parallel = parse_graph("2 2 directed\n1 2\n1 2\n");
  CHECK(std::get<Digraph>(parallel).num_arcs() == 2);

  auto undirected = parse_graph("3 2 undirected\n1 2\n2 3\n");
  REQUIRE(std::holds_alternative<UGraph>(undirected));
  CHECK(std::get<UGraph>(undirected).num_edges() == 2);
}

TEST_CASE("comments and whitespace are tolerated") {
  auto g = parse_graph("# a triangle\n3 3 directed\n# first\n1 2\n\n  2 3\n3 1\n# done\n");
  CHECK(std::get<Digraph>(g).num_arcs() == 3);
}

TEST_CASE("round trip through serialize and parse") {
  Digraph g = testing::make_c3();
  auto back = parse_graph(serialize_graph(g));
  CHECK(std::get<Digraph>(back) == g);
  // Canonical form: serializing again yields the same text.
  CHECK(serialize_graph(std::get<Digraph>(back)) == serialize_graph(g));

  UGraph u = testing::make_p3();
  auto uback = parse_graph(serialize_graph(u));
  CHECK(serialize_graph(std::get<UGraph>(uback)) == serialize_graph(u));
}

TEST_CASE("parse errors carry line numbers") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      parse_graph(text);
      return false;
    } catch (const InputError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
  };
  CHECK(fails_with("3 1 directed\n1 1\n", "line 2"));          // self-loop
  CHECK(fails_with("3 1 directed\n1 4\n", "out of range"));    // bad id
  CHECK(fails_with("3 1 directed\n1\n", "edge lines"));        // malformed
  CHECK(fails_with("3 1 sideways\n1 2\n", "orientation"));
  CHECK(fails_with("3 2 directed\n1 2\n", "end of file"));
  CHECK(fails_with("3 1 directed\n1 2\n9 9\n", "trailing"));
  CHECK_THROWS_AS(parse_graph(""), InputError);
}

TEST_CASE("parser survives arbitrary junk without crashing") {
  std::mt19937_64 rng(2026);
  const std::string alphabet = "0123456789 \t\n#directunp-";
  for (int round = 0; round < 500; ++round) {
    std::string text;
    int len = static_cast<int>(rng() % 60);
    for (int i = 0; i < len; ++i) {
      text += alphabet[rng() % alphabet.size()];
    }
    try {
      auto g = parse_graph(text);
      // Accepted input must re-serialize and re-parse to the same graph.
      if (std::holds_alternative<Digraph>(g)) {
        auto back = parse_graph(serialize_graph(std::get<Digraph>(g)));
        CHECK(std::get<Digraph>(back) == std::get<Digraph>(g));
      }
    } catch (const InputError&) {
      // Rejection with a clean error is the expected outcome.
    }
  }
}

TEST_CASE("label serialization format") {
  Digraph g = testing::make_c3();
  ForestLabeling f =
      ForestLabeling::from_labels(g, 2, IndegreeReserve::none(), {1, 1, 2});
  CHECK(serialize_labels(f) == "1 1\n2 1\n3 2\n");
  auto labels = parse_labels("2 1\n1 1\n3 2\n", 3);
  CHECK(labels == std::vector<int>{1, 1, 2});
  CHECK_THROWS_AS(parse_labels("1 1\n", 3), InputError);       // incomplete
  CHECK_THROWS_AS(parse_labels("1 1\n1 2\n2 0\n", 3), InputError);  // dup
}

TEST_CASE("certificate serialization round trip") {
  Certificate cert;
  cert.sets = {{0}, {1, 2}};
  cert.set_values = {1, 2};
  cert.total = 3;
  std::string text = serialize_certificate(cert);
  Certificate back = parse_certificate(text);
  CHECK(back.sets == cert.sets);
  CHECK(back.set_values == cert.set_values);
  CHECK(back.total == 3);
  CHECK_THROWS_AS(parse_certificate("certificate 1 5\n1 1 1\n"), InputError);
}
