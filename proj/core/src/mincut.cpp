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

#include "forestaug/mincut.hpp"

#include <algorithm>
#include <queue>

namespace forestaug {

FlowNetwork::FlowNetwork(int n) : first_out_(n) {}

int FlowNetwork::add_arc(int tail, int head, int capacity) {
  if (tail == head) return -1;
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back(InnerArc{head, capacity});
  arcs_.push_back(InnerArc{tail, 0});
  first_out_[tail].push_back(id);
  first_out_[head].push_back(id + 1);
  return id / 2;
}

bool FlowNetwork::bfs_augment(int s, int t) {
  const int n = num_nodes();
  std::vector<int> pred_arc(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<int> queue;
  queue.push(s);
  seen[s] = 1;
  while (!queue.empty() && !seen[t]) {
    int u = queue.front();
    queue.pop();
    for (int a : first_out_[u]) {
      int v = arcs_[a].head;
      if (arcs_[a].cap > 0 && !seen[v]) {
        seen[v] = 1;
        pred_arc[v] = a;
        queue.push(v);
        if (v == t) break;
      }
    }
  }
  if (!seen[t]) return false;
  // Unit-style bottleneck: push one unit along the path.
  for (int v = t; v != s;) {
    int a = pred_arc[v];
    arcs_[a].cap -= 1;
    arcs_[a ^ 1].cap += 1;
    v = arcs_[a ^ 1].head;
  }
  return true;
}

int FlowNetwork::max_flow(int s, int t, int cap_at) {
  if (s == t) throw InputError("max_flow requires distinct source and sink");
  last_s_ = s;
  last_t_ = t;
  int value = 0;
  while (value < cap_at && bfs_augment(s, t)) ++value;
  return value;
}

std::vector<char> FlowNetwork::source_side() const {
  std::vector<char> seen(num_nodes(), 0);
  std::queue<int> queue;
  queue.push(last_s_);
  seen[last_s_] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int a : first_out_[u]) {
      if (arcs_[a].cap > 0 && !seen[arcs_[a].head]) {
        seen[arcs_[a].head] = 1;
        queue.push(arcs_[a].head);
      }
    }
  }
  return seen;
}

std::vector<char> FlowNetwork::sink_side_minimal() const {
  // Reverse reachability to t over arcs with positive residual capacity.
  std::vector<char> seen(num_nodes(), 0);
  std::queue<int> queue;
  queue.push(last_t_);
  seen[last_t_] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    // Arc a = (x, u) has residual capacity iff arcs_[a].cap > 0; scan
    // u's incident arc list, which holds the companions (u, x).
    for (int a : first_out_[u]) {
      int x = arcs_[a].head;
      if (seen[x]) continue;
      if (arcs_[a ^ 1].cap > 0) {
        seen[x] = 1;
        queue.push(x);
      }
    }
  }
  return seen;
}

int FlowNetwork::flow_on(int added_arc_index) const {
  return arcs_[2 * added_arc_index + 1].cap;
}

int max_flow_value(const Digraph& g, VertexId s, VertexId t, int cap_at) {
  FlowNetwork net(g.num_vertices());
  for (const Arc& a : g.arcs()) net.add_arc(a.tail, a.head, 1);
  return net.max_flow(s, t, cap_at);
}

int strong_connectivity(const Digraph& g, int cap_at) {
  const int n = g.num_vertices();
  if (n <= 1) return cap_at;
  int best = cap_at;
  const VertexId root = 0;
  for (VertexId v = 1; v < n && best > 0; ++v) {
    best = std::min(best, max_flow_value(g, root, v, best));
    if (best > 0) best = std::min(best, max_flow_value(g, v, root, best));
  }
  return best;
}

bool is_ks_connected(const Digraph& g_with_s, VertexId s, int k) {
  if (k <= 0) return true;
  const int n = g_with_s.num_vertices();
  for (VertexId u = 0; u < n; ++u) {
    if (u == s) continue;
    for (VertexId v = 0; v < n; ++v) {
      if (v == s || v == u) continue;
      if (max_flow_value(g_with_s, u, v, k) < k) return false;
    }
  }
  return true;
}

int edge_connectivity(const UGraph& gu, int cap_at) {
  return strong_connectivity(doubled(gu), cap_at);
}

}  // namespace forestaug
