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

/// Per-vertex demand vector eta. As a k-half-extension of g it promises
/// |entering(A)| + eta(A) >= k for every proper nonempty vertex set A;
/// minimal means no coordinate can be decreased without breaking that.
struct HalfExtension {
  std::vector<int> eta;

  long long total() const {
    long long t = 0;
    for (int x : eta) t += x;
    return t;
  }
};

/// Checks the half-extension inequality by subset enumeration.
/// Refuses n > 20.
bool half_extension_feasible(const Digraph& g, int k,
                             const std::vector<int>& eta);

/// Feasible and no positive coordinate can be decremented.
bool half_extension_minimal(const Digraph& g, int k,
                            const std::vector<int>& eta);

/// Largest level l <= max_level such that g (with all in-edges of a
/// removed) packs l spanning trees in which every vertex except a has
/// indegree exactly l. Found by growing the nested forest solution one
/// level at a time. Equals min(max_level, smallest in-boundary over
/// nonempty vertex sets avoiding a).
int packing_level(const Digraph& g, VertexId a, int max_level);

/// Minimum value for the missing coordinate eta(a) such that every
/// vertex set containing a satisfies the half-extension inequality.
/// Flow-based: saturate eta from an auxiliary source, then measure the
/// residual packing level at a.
int complete_half_extension(const Digraph& g, int k,
                            const std::vector<int>& eta_partial, VertexId a);

/// Minimal k-half-extension: solve the k-forest problem with a full
/// reservation at vertex 0, read deficits off the solution, and complete
/// the coordinate at vertex 0.
HalfExtension minimal_half_extension(const Digraph& g, int k);

/// Cheaper route that works when the plain k-forest solution leaves more
/// than k total deficit: the deficits themselves form a minimal
/// half-extension. Returns nullopt otherwise.
std::optional<HalfExtension> half_extension_fast_path(const Digraph& g, int k);

/// Base graph plus a special node s carrying demand edges: arcs (v, s)
/// listed by tail and arcs (s, v) listed by head. Built so that every
/// pair of base vertices has min cut >= k and the star is balanced.
struct ExtensionGraph {
  const Digraph* base = nullptr;
  std::vector<VertexId> into_special;  // tails of (v, s)
  std::vector<VertexId> from_special;  // heads of (s, v)

  VertexId special() const { return base->num_vertices(); }
  /// Digraph over n+1 vertices including the star edges.
  Digraph materialize() const;
};

/// Builds the star from minimal half-extensions of g and of its reverse
/// (out-edges supply missing in-degree, in-edges the reverse direction),
/// balanced with extra edges at vertex 0. The result refers to g, so g
/// must outlive it; temporaries are rejected.
ExtensionGraph build_extension(const Digraph& g, int k,
                               const HalfExtension& eta,
                               const HalfExtension& eta_rev);
ExtensionGraph build_extension(Digraph&& g, int k, const HalfExtension& eta,
                               const HalfExtension& eta_rev) = delete;

struct SplitOptions {
  /// Re-check full (k,s)-connectivity after every committed split
  /// (quadratic; for tests).
  bool validate_with_full_check = false;
};

struct SplitStats {
  long long candidate_checks = 0;
  long long fallback_flows = 0;
};

/// Splits off the whole star: repeatedly pairs the first remaining
/// in-edge (u,s) with the first out-edge (s,v) whose replacement arc
/// (u,v) keeps every base-pair min cut at k, until s is isolated.
/// The returned arcs, added to the base graph, make it strongly
/// k-connected.
std::vector<Arc> split_off_all(const ExtensionGraph& gx, int k,
                               const SplitOptions& opts = {},
                               SplitStats* stats = nullptr);

struct DirectedAugmentResult {
  std::vector<Arc> edges;
  long long gamma = 0;          // |edges|, the optimum
  long long eta_in_total = 0;   // witness: max of the two totals is gamma
  long long eta_out_total = 0;
  bool fast_path_in = false;
  bool fast_path_out = false;
  bool verified = false;  // final connectivity re-check ran and passed
};

struct AugmentOptions {
  bool verify_final = false;
  SplitOptions split;
};

/// Minimum set of arcs whose addition makes g strongly k-connected,
/// with |edges| = max(eta_in_total, eta_out_total) as the optimality
/// witness.
DirectedAugmentResult augment_directed(const Digraph& g, int k,
                                       const AugmentOptions& opts = {});

}  // namespace forestaug
