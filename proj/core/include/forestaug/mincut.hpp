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

#include <vector>

#include "forestaug/graph.hpp"

namespace forestaug {

/// Unit-style flow network with integer capacities, solved by shortest
/// augmenting paths. Capacities here are small (at most the connectivity
/// target), so no scaling is needed.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n);

  /// Adds an arc with the given capacity (and its zero-capacity reverse
  /// companion); returns an index usable with flow_on. Self-loops are
  /// ignored (they cannot carry useful flow) and yield -1.
  int add_arc(int tail, int head, int capacity);

  int num_nodes() const { return static_cast<int>(first_out_.size()); }

  /// Runs max flow from s to t, stopping once the value reaches cap_at.
  /// Returns the (possibly capped) flow value. Throws InputError if s == t.
  int max_flow(int s, int t, int cap_at);

  /// After max_flow: nodes reachable from s in the residual graph
  /// (the source side of the unique minimal min cut).
  std::vector<char> source_side() const;

  /// After max_flow: nodes that can reach t in the residual graph
  /// (the sink side of the unique minimal-sink-side min cut).
  std::vector<char> sink_side_minimal() const;

  /// Flow currently routed on the i-th added arc.
  int flow_on(int added_arc_index) const;

 private:
  struct InnerArc {
    int head;
    int cap;  // residual capacity
  };
  bool bfs_augment(int s, int t);

  std::vector<InnerArc> arcs_;  // paired: 2i forward, 2i+1 reverse
  std::vector<std::vector<int>> first_out_;
  int last_s_ = -1;
  int last_t_ = -1;
};

/// Max-flow value between two vertices of g with unit arc capacities,
/// capped at cap_at.
int max_flow_value(const Digraph& g, VertexId s, VertexId t, int cap_at);

/// Largest value c <= cap_at such that g is strongly c-connected.
/// Every pair of distinct vertices must have min cut >= c in both
/// directions; a graph with fewer than two vertices is c-connected for
/// every c. Uses the fixed-root reduction (2(n-1) flow computations).
int strong_connectivity(const Digraph& g, int cap_at);

/// Checks Definition-style (k,s)-connectivity of a graph that contains a
/// special node s: every ordered pair of non-s vertices needs min cut
/// >= k. Paths through s count. Quadratic in n; intended for validation
/// and tests, not for the splitting hot path.
bool is_ks_connected(const Digraph& g_with_s, VertexId s, int k);

/// Largest c <= cap_at such that gu is c-edge-connected (checked on the
/// doubled digraph).
int edge_connectivity(const UGraph& gu, int cap_at);

}  // namespace forestaug
