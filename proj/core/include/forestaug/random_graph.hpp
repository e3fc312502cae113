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

#include <random>

#include "forestaug/graph.hpp"

namespace forestaug {

/// Uniform random arcs (tails != heads, parallels allowed).
Digraph random_digraph(int n, int m, std::mt19937_64& rng);

/// A Hamiltonian cycle over a random vertex order plus m - n uniform
/// random arcs; strongly connected by construction, so the connectivity
/// gap under a target k stays controlled. Requires m >= n.
Digraph random_backbone_digraph(int n, int m, std::mt19937_64& rng);

/// Uniform random undirected edges.
UGraph random_ugraph(int n, int m, std::mt19937_64& rng);

/// A random spanning tree plus m - (n-1) uniform edges. Requires
/// m >= n - 1.
UGraph random_connected_ugraph(int n, int m, std::mt19937_64& rng);

}  // namespace forestaug
