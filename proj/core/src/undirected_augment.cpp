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

#include "forestaug/undirected_augment.hpp"

#include <algorithm>

#include "forestaug/mincut.hpp"
#include "forestaug/oracle.hpp"
#include "forestaug/union_find.hpp"

namespace forestaug {

HalfExtension minimal_k_extension(const UGraph& gu, int k) {
  if (k < 2) {
    throw InputError("k-extensions are defined here for k >= 2");
  }
  return minimal_half_extension(doubled(gu), k);
}

long long cai_sun_value(const UGraph& gu, int k) {
  if (k < 2) throw InputError("the subpartition formula requires k >= 2");
  const int n = gu.num_vertices();
  if (n > 14) throw InputError("subpartition enumeration refuses n > 14");
  const std::vector<int> no_reserve(n, 0);
  long long best = brute_subpartition_max(doubled(gu), k, no_reserve, true);
  return (std::max(best, 0LL) + 1) / 2;
}

namespace {

// Dangerous-set test for an undirected split at s: pairing {u,s},{v,s}
// into {u,v} lowers by two the cut of every proper set holding u and v
// but not s, so it is safe iff no such set has cut size <= k+1.
bool undirected_split_safe(const std::vector<Arc>& doubled_arcs, int n_total,
                           int s, int u, int v, int k, SplitStats* stats) {
  auto build = [&](int pinned) {
    FlowNetwork net(n_total);
    for (const Arc& a : doubled_arcs) {
      int tail = a.tail == v ? u : a.tail;
      int head = a.head == v ? u : a.head;
      if (pinned >= 0) {
        if (tail == pinned) tail = s;
        if (head == pinned) head = s;
      }
      net.add_arc(tail, head, 1);
    }
    return net;
  };
  const int threshold = k + 1;
  FlowNetwork net = build(-1);
  if (stats) stats->candidate_checks += 1;
  int flow = net.max_flow(s, u, threshold + 1);
  if (flow > threshold) return true;
  std::vector<char> sink_side = net.sink_side_minimal();
  int cover = 0;
  for (int w = 0; w < n_total; ++w) {
    if (w != s && w != v && sink_side[w]) ++cover;
  }
  if (cover < n_total - 2) return false;
  for (int x = 0; x < n_total; ++x) {
    if (x == s || x == u || x == v) continue;
    FlowNetwork pinned = build(x);
    if (stats) stats->fallback_flows += 1;
    if (pinned.max_flow(s, u, threshold + 1) <= threshold) return false;
  }
  return true;
}

UndirectedAugmentResult patch_components(const UGraph& gu) {
  UndirectedAugmentResult result;
  UnionFind uf(gu.num_vertices());
  for (const auto& [u, v] : gu.edges()) uf.unite(u, v);
  std::vector<VertexId> reps;
  std::vector<char> seen(gu.num_vertices(), 0);
  for (VertexId v = 0; v < gu.num_vertices(); ++v) {
    int r = uf.find(v);
    if (!seen[r]) {
      seen[r] = 1;
      reps.push_back(v);
    }
  }
  for (size_t i = 0; i + 1 < reps.size(); ++i) {
    result.edges.emplace_back(reps[i], reps[i + 1]);
  }
  result.gamma = static_cast<long long>(result.edges.size());
  return result;
}

}  // namespace

UndirectedAugmentResult augment_undirected(const UGraph& gu, int k,
                                           const UndirectedAugmentOptions& opts) {
  if (k < 1) throw InputError("connectivity target k must be at least 1");
  UndirectedAugmentResult result;
  const int n = gu.num_vertices();
  if (n <= 1) {
    result.verified = opts.verify_final;
    return result;
  }

  if (k == 1) {
    result = patch_components(gu);
  } else {
    const Digraph dg = doubled(gu);
    HalfExtension ext;
    if (auto fast = half_extension_fast_path(dg, k)) {
      ext = std::move(*fast);
      result.fast_path = true;
    } else {
      ext = minimal_half_extension(dg, k);
    }
    if (ext.total() % 2 != 0) {
      ext.eta[0] += 1;
      result.parity_bumped = true;
    }
    result.eta_total = ext.total();

    const int s = n;
    std::vector<VertexId> star;
    for (VertexId v = 0; v < n; ++v) {
      for (int c = 0; c < ext.eta[v]; ++c) star.push_back(v);
    }

    std::vector<Arc> arcs = dg.arcs();
    SplitStats stats;
    while (!star.empty()) {
      std::vector<Arc> current = arcs;
      for (VertexId v : star) {
        current.push_back(Arc{v, s});
        current.push_back(Arc{s, v});
      }
      const VertexId u = star.front();
      int partner = -1;
      for (size_t i = 1; i < star.size(); ++i) {
        const VertexId v = star[i];
        if (v == u) continue;
        if (undirected_split_safe(current, n + 1, s, u, v, k, &stats)) {
          partner = static_cast<int>(i);
          break;
        }
      }
      if (partner < 0) {
        throw InvariantError("no admissible split partner for a star edge");
      }
      const VertexId v = star[partner];
      star.erase(star.begin() + partner);
      star.erase(star.begin());
      arcs.push_back(Arc{u, v});
      arcs.push_back(Arc{v, u});
      result.edges.emplace_back(u, v);

      if (opts.split.validate_with_full_check) {
        Digraph check(n + 1);
        for (const Arc& a : arcs) check.add_arc(a.tail, a.head);
        for (VertexId w : star) {
          check.add_arc(w, s);
          check.add_arc(s, w);
        }
        if (!is_ks_connected(check, s, k)) {
          throw InvariantError("a committed split broke (k,s)-connectivity");
        }
      }
    }
    result.gamma = static_cast<long long>(result.edges.size());
    if (result.gamma * 2 != result.eta_total) {
      throw InvariantError("split count disagrees with the extension degree");
    }
  }

  if (opts.verify_final) {
    UGraph augmented(n);
    for (const auto& [u, v] : gu.edges()) augmented.add_edge(u, v);
    for (const auto& [u, v] : result.edges) augmented.add_edge(u, v);
    if (edge_connectivity(augmented, k) < k) {
      throw InvariantError("augmented graph failed the connectivity re-check");
    }
    result.verified = true;
  }
  return result;
}

}  // namespace forestaug
