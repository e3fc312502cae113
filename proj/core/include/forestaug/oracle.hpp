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

#include <optional>
#include <vector>

#include "forestaug/graph.hpp"
#include "forestaug/kforest.hpp"

namespace forestaug {

// Exhaustive and exchange-graph reference solvers. These anchor the
// optimized implementations in tests and in the `verify` CLI command;
// they refuse instances beyond small, hard size limits.

/// True iff the given edge subset splits into k forests (directions
/// ignored). Checked by the density criterion: every nonempty vertex set
/// X spans at most k(|X|-1) subset edges. Refuses n > 20.
bool decomposes_into_k_forests(const Digraph& g,
                               const std::vector<char>& in_subset, int k);

/// Same question decided by backtracking over explicit k-colorings.
bool decomposes_into_k_forests_by_coloring(const Digraph& g,
                                           const std::vector<char>& in_subset,
                                           int k);

/// Exact optimum of the bounded-indegree k-forest problem by exhaustive
/// subset enumeration. reserve is an arbitrary per-vertex vector in
/// [0, k]. Refuses m > 16 or n > 12.
long long brute_kforest_value(const Digraph& g, int k,
                              const std::vector<int>& reserve);

/// Exact maximum over (proper) subpartitions of
/// sum_A (k - reserve(A) - |entering(A)|), by subset dynamic
/// programming. The empty family contributes 0. Refuses n > 14.
long long brute_subpartition_max(const Digraph& g, int k,
                                 const std::vector<int>& reserve,
                                 bool proper_only);

/// Matroid-intersection reference solver: repeatedly augments along
/// shortest source-target paths in the intersection exchange graph,
/// maintaining an explicit forest decomposition via union exchange
/// paths. Must agree with brute_kforest_value. Refuses m > 24 or n > 12.
long long matroid_intersection_solve(const Digraph& g, int k,
                                     const std::vector<int>& reserve);

/// Smallest number of added arcs making g strongly k-connected, found by
/// iterative deepening over arc multisets (per-pair multiplicity at most
/// k). Returns nullopt when the optimum exceeds max_gamma. Refuses n > 5.
std::optional<long long> brute_min_augmentation_directed(const Digraph& g,
                                                         int k,
                                                         int max_gamma = 6);

/// Undirected counterpart (k-edge-connectivity target).
std::optional<long long> brute_min_augmentation_undirected(const UGraph& g,
                                                           int k,
                                                           int max_gamma = 6);

}  // namespace forestaug
