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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "forestaug/certificate.hpp"
#include "forestaug/graph.hpp"
#include "forestaug/kforest.hpp"

namespace forestaug {

// Edge-list text format, shared by every command:
//   first line:  n m directed|undirected
//   then m lines: u v          (vertices are 1-based in files)
// Tokens are whitespace-separated; lines whose first token starts with
// '#' are comments. Parse errors carry 1-based line numbers.

using AnyGraph = std::variant<Digraph, UGraph>;

AnyGraph parse_graph(std::string_view text);
std::string serialize_graph(const Digraph& g);
std::string serialize_graph(const UGraph& g);

// Forest labeling format: one line `edgeId label` per edge (both
// 1-based; label 0 means uncovered), in any order, each edge exactly
// once.
std::string serialize_labels(const ForestLabeling& f);
std::vector<int> parse_labels(std::string_view text, int num_edges);

// Certificate format:
//   certificate <numSets> <total>
//   <value> <size> <v1> ... <vsize>   (one line per set, 1-based ids)
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

// Added-edge lists reuse the graph format (n of the original graph).
std::string serialize_arcs(const std::vector<Arc>& arcs, int n);
std::string serialize_edges(const std::vector<std::pair<VertexId, VertexId>>& edges,
                            int n);

}  // namespace forestaug
