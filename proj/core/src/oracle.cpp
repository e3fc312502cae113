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

#include "forestaug/oracle.hpp"

#include <algorithm>
#include <string>

#include "forestaug/mincut.hpp"
#include "forestaug/union_find.hpp"

namespace forestaug {

namespace {

void check_reserve(const std::vector<int>& reserve, int n, int k) {
  if (static_cast<int>(reserve.size()) != n) {
    throw InputError("reserve vector size does not match vertex count");
  }
  for (int r : reserve) {
    if (r < 0 || r > k) throw InputError("reserve entry out of [0, k]");
  }
}

bool indegree_ok(const Digraph& g, const std::vector<char>& in_subset, int k,
                 const std::vector<int>& reserve) {
  std::vector<int> indeg(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    if (in_subset[e]) indeg[g.arc(e).head] += 1;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (indeg[v] > k - reserve[v]) return false;
  }
  return true;
}

}  // namespace

bool decomposes_into_k_forests(const Digraph& g,
                               const std::vector<char>& in_subset, int k) {
  const int n = g.num_vertices();
  if (n > 20) throw InputError("forest-decomposition oracle refuses n > 20");
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int filled = __builtin_popcount(mask);
    long long internal = 0;
    for (EdgeId e = 0; e < g.num_arcs(); ++e) {
      if (!in_subset[e]) continue;
      const Arc& a = g.arc(e);
      if ((mask >> a.tail & 1u) && (mask >> a.head & 1u)) ++internal;
    }
    if (internal > static_cast<long long>(k) * (filled - 1)) return false;
  }
  return true;
}

bool decomposes_into_k_forests_by_coloring(const Digraph& g,
                                           const std::vector<char>& in_subset,
                                           int k) {
  std::vector<EdgeId> picked;
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    if (in_subset[e]) picked.push_back(e);
  }
  std::vector<UnionFind> forests(k, UnionFind(g.num_vertices()));
  auto backtrack = [&](auto&& self, size_t at) -> bool {
    if (at == picked.size()) return true;
    const Arc& a = g.arc(picked[at]);
    for (int j = 0; j < k; ++j) {
      if (forests[j].same(a.tail, a.head)) continue;
      UnionFind saved = forests[j];
      forests[j].unite(a.tail, a.head);
      if (self(self, at + 1)) return true;
      forests[j] = std::move(saved);
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

long long brute_kforest_value(const Digraph& g, int k,
                              const std::vector<int>& reserve) {
  const int n = g.num_vertices();
  const int m = g.num_arcs();
  if (m > 16 || n > 12) {
    throw InputError("brute k-forest oracle refuses m > 16 or n > 12");
  }
  check_reserve(reserve, n, k);
  long long best = 0;
  std::vector<char> in_subset(m, 0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    for (int e = 0; e < m; ++e) in_subset[e] = (mask >> e) & 1u;
    if (!indegree_ok(g, in_subset, k, reserve)) continue;
    if (!decomposes_into_k_forests(g, in_subset, k)) continue;
    best = size;
  }
  return best;
}

long long brute_subpartition_max(const Digraph& g, int k,
                                 const std::vector<int>& reserve,
                                 bool proper_only) {
  const int n = g.num_vertices();
  if (n > 14) throw InputError("subpartition oracle refuses n > 14");
  check_reserve(reserve, n, k);
  if (n == 0) return 0;

  const unsigned full = (1u << n) - 1;
  // Per-subset value: k - reserve(A) - |entering(A)|.
  std::vector<long long> value(full + 1, k);
  for (unsigned mask = 1; mask <= full; ++mask) {
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) value[mask] -= reserve[v];
    }
  }
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    const Arc& a = g.arc(e);
    for (unsigned mask = 1; mask <= full; ++mask) {
      if ((mask >> a.head & 1u) && !(mask >> a.tail & 1u)) value[mask] -= 1;
    }
  }

  // best[mask]: max total over disjoint families drawn from mask.
  std::vector<long long> best(full + 1, 0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    unsigned low = mask & (~mask + 1);
    best[mask] = best[mask ^ low];  // leave the lowest vertex unassigned
    for (unsigned sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;  // blocks containing the lowest vertex
      if (proper_only && sub == full) continue;
      best[mask] = std::max(best[mask], value[sub] + best[mask ^ sub]);
    }
  }
  return best[full];
}

namespace {

// Labeled state of the reference intersection solver: the labels are the
// explicit witness that the covered set splits into k forests.
struct RefState {
  const Digraph* g;
  int k;
  const std::vector<int>* reserve;
  std::vector<int> label;  // 0 = uncovered
  std::vector<int> indeg;

  bool covered(EdgeId e) const { return label[e] != 0; }

  bool forest_has(int j, EdgeId e) const { return label[e] == j; }

  // Does forest j stay acyclic after swapping e out and f in?
  bool swap_keeps_forest(int j, EdgeId out, EdgeId in) const {
    UnionFind uf(g->num_vertices());
    for (EdgeId e = 0; e < g->num_arcs(); ++e) {
      if (label[e] != j || e == out) continue;
      uf.unite(g->arc(e).tail, g->arc(e).head);
    }
    return !uf.same(g->arc(in).tail, g->arc(in).head);
  }

  bool joining(int j, EdgeId e) const {
    if (label[e] == j) return false;
    UnionFind uf(g->num_vertices());
    for (EdgeId e2 = 0; e2 < g->num_arcs(); ++e2) {
      if (label[e2] == j) uf.unite(g->arc(e2).tail, g->arc(e2).head);
    }
    return !uf.same(g->arc(e).tail, g->arc(e).head);
  }

  bool joining_any(EdgeId e) const {
    for (int j = 1; j <= k; ++j) {
      if (joining(j, e)) return true;
    }
    return false;
  }

  void assert_valid() const {
    std::vector<UnionFind> uf(k + 1, UnionFind(g->num_vertices()));
    std::vector<int> deg(g->num_vertices(), 0);
    for (EdgeId e = 0; e < g->num_arcs(); ++e) {
      if (label[e] == 0) continue;
      const Arc& a = g->arc(e);
      if (!uf[label[e]].unite(a.tail, a.head)) {
        throw InvariantError("reference solver produced a cyclic forest");
      }
      deg[a.head] += 1;
    }
    for (VertexId v = 0; v < g->num_vertices(); ++v) {
      if (deg[v] > k - (*reserve)[v]) {
        throw InvariantError("reference solver violated an indegree budget");
      }
    }
  }

  // Inserts x into the decomposition by rotating labels along a shortest
  // exchange path of the union matroid; x must be addable.
  void insert_via_union_path(EdgeId x) {
    const int m = g->num_arcs();
    std::vector<EdgeId> pred(m, -2);
    std::vector<EdgeId> queue{x};
    pred[x] = -1;
    EdgeId last = -1;
    int last_forest = 0;
    for (size_t at = 0; at < queue.size() && last < 0; ++at) {
      EdgeId f = queue[at];
      for (int j = 1; j <= k && last < 0; ++j) {
        if (label[f] == j) continue;
        if (joining(j, f)) {
          last = f;
          last_forest = j;
          break;
        }
      }
      if (last >= 0) break;
      for (EdgeId e = 0; e < m; ++e) {
        int j = label[e];
        if (j == 0 || label[f] == j || pred[e] != -2) continue;
        if (swap_keeps_forest(j, e, f)) {
          pred[e] = f;
          queue.push_back(e);
        }
      }
    }
    if (last < 0) {
      throw InvariantError("union exchange path vanished mid-application");
    }
    // Rotate: each path element takes the label of its successor.
    std::vector<EdgeId> path;
    for (EdgeId e = last; e >= 0; e = pred[e]) path.push_back(e);
    std::reverse(path.begin(), path.end());  // path[0] == x
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      set_label(path[i], label[path[i + 1]]);
    }
    set_label(path.back(), last_forest);
  }

  void set_label(EdgeId e, int j) {
    const Arc& a = g->arc(e);
    if (label[e] != 0 && j == 0) indeg[a.head] -= 1;
    if (label[e] == 0 && j != 0) indeg[a.head] += 1;
    label[e] = j;
  }
};

}  // namespace

long long matroid_intersection_solve(const Digraph& g, int k,
                                     const std::vector<int>& reserve) {
  const int n = g.num_vertices();
  const int m = g.num_arcs();
  if (m > 24 || n > 12) {
    throw InputError("intersection reference solver refuses m > 24 or n > 12");
  }
  check_reserve(reserve, n, k);

  RefState st{&g, k, &reserve, std::vector<int>(m, 0), std::vector<int>(n, 0)};

  auto insertable_degreewise = [&](EdgeId x) {
    VertexId h = g.arc(x).head;
    return st.indeg[h] < k - reserve[h];
  };
  // Covered set plus x minus y still splits into k forests?
  auto union_exchange_ok = [&](EdgeId x, EdgeId y) {
    std::vector<char> subset(m, 0);
    for (EdgeId e = 0; e < m; ++e) subset[e] = st.covered(e) ? 1 : 0;
    subset[x] = 1;
    subset[y] = 0;
    return decomposes_into_k_forests(g, subset, k);
  };

  while (true) {
    // Shortest source-target path in the intersection exchange graph:
    // source -> x (degree-insertable), x -> t (addable to the union
    // side), x -> y / y -> x exchange arcs between the two matroids.
    std::vector<char> addable_union(m, 0);
    {
      std::vector<char> subset(m, 0);
      for (EdgeId e = 0; e < m; ++e) subset[e] = st.covered(e) ? 1 : 0;
      for (EdgeId x = 0; x < m; ++x) {
        if (st.covered(x)) continue;
        subset[x] = 1;
        addable_union[x] = decomposes_into_k_forests(g, subset, k) ? 1 : 0;
        subset[x] = 0;
      }
    }

    std::vector<EdgeId> pred(m, -2);
    std::vector<EdgeId> queue;
    for (EdgeId x = 0; x < m; ++x) {
      if (!st.covered(x) && insertable_degreewise(x)) {
        pred[x] = -1;
        queue.push_back(x);
      }
    }
    EdgeId goal = -1;
    for (size_t at = 0; at < queue.size() && goal < 0; ++at) {
      EdgeId cur = queue[at];
      if (!st.covered(cur)) {
        if (addable_union[cur]) {
          goal = cur;
          break;
        }
        for (EdgeId y = 0; y < m; ++y) {  // union-side exchange x -> y
          if (!st.covered(y) || pred[y] != -2) continue;
          if (union_exchange_ok(cur, y)) {
            pred[y] = cur;
            queue.push_back(y);
          }
        }
      } else {
        VertexId moved = g.arc(cur).head;
        for (EdgeId x = 0; x < m; ++x) {  // degree-side exchange y -> x
          if (st.covered(x) || pred[x] != -2) continue;
          VertexId h = g.arc(x).head;
          int slack = k - reserve[h] - st.indeg[h] + (h == moved ? 1 : 0);
          if (slack > 0) {
            pred[x] = cur;
            queue.push_back(x);
          }
        }
      }
    }
    if (goal < 0) break;

    std::vector<EdgeId> path;
    for (EdgeId e = goal; e >= 0; e = pred[e]) path.push_back(e);
    std::reverse(path.begin(), path.end());
    // path alternates x_1, y_1, x_2, y_2, ..., x_r; apply the union-side
    // exchanges pairwise, then insert the final element.
    for (size_t i = 0; i + 1 < path.size(); i += 2) {
      st.set_label(path[i + 1], 0);
      st.insert_via_union_path(path[i]);
      st.assert_valid();
    }
    st.insert_via_union_path(path.back());
    st.assert_valid();
  }

  long long size = 0;
  for (EdgeId e = 0; e < m; ++e) {
    if (st.covered(e)) ++size;
  }
  return size;
}

namespace {

template <typename Check>
bool multisets_of_size(int pairs, int per_pair_cap, int size,
                       std::vector<int>& mult, size_t at, const Check& check) {
  if (size == 0) return check(mult);
  if (at == mult.size()) return false;
  int take_cap = std::min(per_pair_cap, size);
  for (int take = 0; take <= take_cap; ++take) {
    mult[at] = take;
    if (multisets_of_size(pairs, per_pair_cap, size - take, mult, at + 1,
                          check)) {
      return true;
    }
  }
  mult[at] = 0;
  return false;
}

}  // namespace

std::optional<long long> brute_min_augmentation_directed(const Digraph& g,
                                                         int k, int max_gamma) {
  const int n = g.num_vertices();
  if (n > 5) throw InputError("augmentation oracle refuses n > 5");
  if (n <= 1) return 0;
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) slots.emplace_back(u, v);
    }
  }
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const Arc& a : g.arcs()) {
    indeg[a.head] += 1;
    outdeg[a.tail] += 1;
  }
  for (int gamma = 0; gamma <= max_gamma; ++gamma) {
    std::vector<int> mult(slots.size(), 0);
    auto works = [&](const std::vector<int>& chosen) {
      // A vertex short on degree cannot be k-connected; skip the flows.
      std::vector<int> in2 = indeg, out2 = outdeg;
      for (size_t i = 0; i < slots.size(); ++i) {
        in2[slots[i].second] += chosen[i];
        out2[slots[i].first] += chosen[i];
      }
      for (int v = 0; v < n; ++v) {
        if (in2[v] < k || out2[v] < k) return false;
      }
      Digraph h(n);
      for (const Arc& a : g.arcs()) h.add_arc(a.tail, a.head);
      for (size_t i = 0; i < slots.size(); ++i) {
        for (int c = 0; c < chosen[i]; ++c) {
          h.add_arc(slots[i].first, slots[i].second);
        }
      }
      return strong_connectivity(h, k) >= k;
    };
    if (multisets_of_size(static_cast<int>(slots.size()), k, gamma, mult, 0,
                          works)) {
      return gamma;
    }
  }
  return std::nullopt;
}

std::optional<long long> brute_min_augmentation_undirected(const UGraph& g,
                                                           int k,
                                                           int max_gamma) {
  const int n = g.num_vertices();
  if (n > 5) throw InputError("augmentation oracle refuses n > 5");
  if (n <= 1) return 0;
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<int> degree(n, 0);
  for (const auto& [u, v] : g.edges()) {
    degree[u] += 1;
    degree[v] += 1;
  }
  for (int gamma = 0; gamma <= max_gamma; ++gamma) {
    std::vector<int> mult(slots.size(), 0);
    auto works = [&](const std::vector<int>& chosen) {
      std::vector<int> deg2 = degree;
      for (size_t i = 0; i < slots.size(); ++i) {
        deg2[slots[i].first] += chosen[i];
        deg2[slots[i].second] += chosen[i];
      }
      for (int v = 0; v < n; ++v) {
        if (deg2[v] < k) return false;
      }
      UGraph h(n);
      for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
      for (size_t i = 0; i < slots.size(); ++i) {
        for (int c = 0; c < chosen[i]; ++c) {
          h.add_edge(slots[i].first, slots[i].second);
        }
      }
      return edge_connectivity(h, k) >= k;
    };
    if (multisets_of_size(static_cast<int>(slots.size()), k, gamma, mult, 0,
                          works)) {
      return gamma;
    }
  }
  return std::nullopt;
}

}  // namespace forestaug
