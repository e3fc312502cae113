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
#include "forestaug/union_find.hpp"

namespace forestaug {

/// Per-vertex reservation of indegree capacity. A vertex with a full
/// reservation (the "root" form) may not receive any covered in-edges;
/// everywhere else the indegree budget is k.
class IndegreeReserve {
 public:
  static IndegreeReserve none() { return IndegreeReserve(-1); }
  static IndegreeReserve root(VertexId a) {
    if (a < 0) throw InputError("root vertex must be non-negative");
    return IndegreeReserve(a);
  }

  bool is_root() const { return root_ >= 0; }
  VertexId root_vertex() const { return root_; }

  /// Reserved slots at v: k at the root vertex, 0 elsewhere.
  int value_at(VertexId v, int k) const { return v == root_ ? k : 0; }

  friend bool operator==(const IndegreeReserve& a, const IndegreeReserve& b) {
    return a.root_ == b.root_;
  }

 private:
  explicit IndegreeReserve(VertexId a) : root_(a) {}
  VertexId root_ = -1;
};

/// A v-t path in the exchange graph: the first edge is uncovered, the
/// last edge joins two components of the target forest.
struct AugmentingPath {
  VertexId start;
  std::vector<EdgeId> edges;
  int target_forest;
};

/// Edge-disjoint forests F_1,...,F_k stored as per-edge labels
/// (0 = uncovered), with per-forest component structures and indegree
/// bookkeeping. Feasibility (each label class acyclic, indegree within
/// budget) is an invariant of the type: constructors validate and
/// apply_augmentation preserves it.
class ForestLabeling {
 public:
  /// Empty labeling (every edge uncovered). The labeling refers to g,
  /// so g must outlive it; temporaries are rejected.
  ForestLabeling(const Digraph& g, int k,
                 IndegreeReserve reserve = IndegreeReserve::none());
  ForestLabeling(Digraph&& g, int k,
                 IndegreeReserve reserve = IndegreeReserve::none()) = delete;

  /// Builds from explicit labels, validating acyclicity per forest and
  /// the indegree budget. Throws InputError on any violation.
  static ForestLabeling from_labels(const Digraph& g, int k,
                                    IndegreeReserve reserve,
                                    const std::vector<int>& labels);
  static ForestLabeling from_labels(Digraph&& g, int k, IndegreeReserve reserve,
                                    const std::vector<int>& labels) = delete;

  const Digraph& graph() const { return *g_; }
  int k() const { return k_; }
  const IndegreeReserve& reserve() const { return reserve_; }
  int reserve_at(VertexId v) const { return reserve_.value_at(v, k_); }

  /// Number of covered edges, |F|.
  int size() const { return size_; }
  int label(EdgeId e) const { return label_[e]; }
  bool covered(EdgeId e) const { return label_[e] != 0; }
  const std::vector<int>& labels() const { return label_; }

  int indegree(VertexId v) const { return indeg_[v]; }
  /// k - reserve(v) - indegree(v); never negative.
  int deficit(VertexId v) const { return k_ - reserve_at(v) - indeg_[v]; }
  long long total_deficit() const;

  bool same_component(int forest, VertexId u, VertexId v) const {
    return uf_[forest].same(u, v);
  }
  int component_root(int forest, VertexId v) const { return uf_[forest].find(v); }
  int num_components(int forest) const { return uf_[forest].num_components(); }

  /// True if e is outside the forest and would join two of its components.
  bool is_joining(int forest, EdgeId e) const;
  /// Smallest forest index e is joining for, or 0 if none.
  int min_joining_forest(EdgeId e) const;

  /// Edges of the forest incident to v (both directions).
  const std::vector<EdgeId>& forest_adjacency(int forest, VertexId v) const {
    return adj_[forest][v];
  }

  /// Edge ids of the unique forest path between u and w; empty when
  /// u == w or when they are in different components.
  std::vector<EdgeId> forest_path(int forest, VertexId u, VertexId w) const;

  /// Rotates labels along an augmenting path: each path edge takes the
  /// label of its successor and the last edge joins the target forest.
  /// Grows |F| by one and the start vertex's indegree by one. Throws
  /// InvariantError if the path is malformed (which would indicate a
  /// search bug, not bad input).
  void apply_augmentation(const AugmentingPath& path);

  /// Same labels viewed as a problem with a larger forest count.
  ForestLabeling extended_to(int new_k) const;

  /// Recomputes all derived state from the labels and cross-checks it;
  /// throws InvariantError on any mismatch.
  void validate() const;

  /// Components of every later forest lie within components of every
  /// earlier one. A solver invariant, not a type invariant.
  bool is_nested() const;

 private:
  ForestLabeling() = default;

  const Digraph* g_ = nullptr;
  int k_ = 0;
  IndegreeReserve reserve_ = IndegreeReserve::none();
  std::vector<int> label_;
  std::vector<int> indeg_;
  std::vector<UnionFind> uf_;                       // index 1..k
  std::vector<std::vector<std::vector<EdgeId>>> adj_;  // [forest][vertex]
  int size_ = 0;
};

/// Node of the exchange graph over V + E + {target}.
struct ExchangeNode {
  enum class Kind { Vertex, Edge, Target };
  Kind kind;
  int id;

  static ExchangeNode vertex(VertexId v) { return {Kind::Vertex, v}; }
  static ExchangeNode edge(EdgeId e) { return {Kind::Edge, e}; }
  static ExchangeNode target() { return {Kind::Target, -1}; }

  friend bool operator==(const ExchangeNode& a, const ExchangeNode& b) {
    return a.kind == b.kind && a.id == b.id;
  }
};

/// Out-neighbors of a node in the exchange graph:
///   vertex v -> uncovered edges with head v, when v has spare indegree;
///   edge e -> target, when e joins two components of some forest;
///   covered e -> uncovered edges sharing e's head;
///   edge e -> covered f in a forest not containing e, when swapping e
///             for f keeps that forest acyclic.
std::vector<ExchangeNode> exchange_successors(const ForestLabeling& f,
                                              const ExchangeNode& node);

/// Breadth-first search for augmenting paths, with reusable scratch
/// space. Bound to one labeling; searches reflect the labeling's current
/// state at call time.
class PathSearcher {
 public:
  explicit PathSearcher(const ForestLabeling& f);

  /// Shortest augmenting path starting at v, or nullopt if none exists.
  /// Read-only with respect to the labeling.
  std::optional<AugmentingPath> from(VertexId v);

 private:
  struct ForestScratch {
    long long built_epoch = -1;
    std::vector<VertexId> parent_vertex;
    std::vector<EdgeId> parent_edge;
    std::vector<int> depth;
    std::vector<int> link;           // collapse structure over vertices
    std::vector<VertexId> class_top;  // shallowest vertex per class root
  };

  void ensure_forest_built(int forest);
  VertexId top_of(ForestScratch& fs, VertexId v);
  int find_class(ForestScratch& fs, int v);
  void walk_forest_path(int forest, VertexId u, VertexId w, EdgeId pred);
  AugmentingPath build_path(VertexId start, EdgeId last, int target) const;

  const ForestLabeling* f_;
  long long epoch_ = 0;
  std::vector<long long> edge_seen_;
  std::vector<EdgeId> pred_;
  std::vector<EdgeId> queue_;
  std::vector<ForestScratch> forests_;
};

struct SolveStats {
  // Outer while-loop rounds taken while growing each forest, indexed by
  // level - 1.
  std::vector<long long> rounds_per_level;
  long long augmentations = 0;
  long long failed_searches = 0;
  // Component-deficit instrumentation (when enabled in SolveOptions).
  long long deficit_checks = 0;
  long long deficit_violations = 0;
};

struct SolveOptions {
  /// After every augmentation while growing forest j, verify that each
  /// component C of F_j has total deficit at most j.
  bool check_component_deficits = false;
  /// Run the full labeling validator after every augmentation (slow).
  bool validate_each_step = false;
};

/// Grows the last forest of f to optimality by repeated augmenting-path
/// searches, visiting deficient components round by round. Expects the
/// earlier forests to form an optimal nested solution for k-1 (as
/// produced by solve_kforest / extended_to).
void grow_last_forest(ForestLabeling& f, const SolveOptions& opts = {},
                      SolveStats* stats = nullptr);

/// Solves the bounded-indegree k-forest problem: maximizes |F| over
/// k edge-disjoint forests with indeg_F(v) <= k - reserve(v). The root
/// form of the reserve is handled by dropping the root's in-edges and
/// solving with no reservation. Deterministic. The result refers to g.
ForestLabeling solve_kforest(const Digraph& g, int k,
                             IndegreeReserve reserve = IndegreeReserve::none(),
                             const SolveOptions& opts = {},
                             SolveStats* stats = nullptr);
ForestLabeling solve_kforest(Digraph&& g, int k,
                             IndegreeReserve reserve = IndegreeReserve::none(),
                             const SolveOptions& opts = {},
                             SolveStats* stats = nullptr) = delete;

}  // namespace forestaug
