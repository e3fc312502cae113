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

#include "forestaug/directed_augment.hpp"

#include <algorithm>
#include <string>

#include "forestaug/mincut.hpp"

namespace forestaug {

bool half_extension_feasible(const Digraph& g, int k,
                             const std::vector<int>& eta) {
  const int n = g.num_vertices();
  if (n > 20) throw InputError("feasibility check refuses n > 20");
  if (static_cast<int>(eta.size()) != n) {
    throw InputError("eta size does not match vertex count");
  }
  if (n <= 1) return true;
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    long long have = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) have += eta[v];
    }
    if (have >= k) continue;
    for (const Arc& a : g.arcs()) {
      if ((mask >> a.head & 1u) && !(mask >> a.tail & 1u)) ++have;
    }
    if (have < k) return false;
  }
  return true;
}

bool half_extension_minimal(const Digraph& g, int k,
                            const std::vector<int>& eta) {
  if (!half_extension_feasible(g, k, eta)) return false;
  std::vector<int> probe = eta;
  for (size_t v = 0; v < probe.size(); ++v) {
    if (probe[v] == 0) continue;
    probe[v] -= 1;
    if (half_extension_feasible(g, k, probe)) return false;
    probe[v] += 1;
  }
  return true;
}

int packing_level(const Digraph& g, VertexId a, int max_level) {
  if (a < 0 || a >= std::max(g.num_vertices(), 1)) {
    throw InputError("packing root out of range");
  }
  if (max_level <= 0) return 0;
  const int n = g.num_vertices();

  Digraph stripped(n);
  for (const Arc& arc : g.arcs()) {
    if (arc.head != a) stripped.add_arc(arc.tail, arc.head);
  }

  ForestLabeling f(stripped, 1);
  for (int level = 1; level <= max_level; ++level) {
    if (level > 1) f = f.extended_to(level);
    grow_last_forest(f);
    if (f.size() != static_cast<long long>(level) * (n - 1)) return level - 1;
  }
  return max_level;
}

int complete_half_extension(const Digraph& g, int k,
                            const std::vector<int>& eta_partial, VertexId a) {
  const int n = g.num_vertices();
  if (a < 0 || a >= n) throw InputError("vertex a out of range");
  if (static_cast<int>(eta_partial.size()) != n) {
    throw InputError("eta size does not match vertex count");
  }

  const int source = n;
  const int sink = n + 1;
  FlowNetwork net(n + 2);
  std::vector<int> base_idx(g.num_arcs());
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    base_idx[e] = net.add_arc(g.arc(e).tail, g.arc(e).head, 1);
  }
  std::vector<int> star_idx(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (v != a) star_idx[v] = net.add_arc(source, v, eta_partial[v]);
  }
  net.add_arc(a, sink, k);

  int f = net.max_flow(source, sink, k);
  bool star_unsaturated = false;
  for (VertexId v = 0; v < n && !star_unsaturated; ++v) {
    if (v != a && net.flow_on(star_idx[v]) < eta_partial[v]) {
      star_unsaturated = true;
    }
  }
  if (f == k || star_unsaturated) return k - f;

  // All demand edges saturated and the sink edge is not: measure how much
  // connectivity toward a the residual graph still supports.
  Digraph residual(n);
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    const Arc& arc = g.arc(e);
    if (net.flow_on(base_idx[e]) == 0) {
      residual.add_arc(arc.tail, arc.head);
    } else {
      residual.add_arc(arc.head, arc.tail);
    }
  }
  int level = packing_level(residual.reversed(), a, k - f);
  return k - f - level;
}

HalfExtension minimal_half_extension(const Digraph& g, int k) {
  if (k < 1) throw InputError("connectivity target k must be at least 1");
  const int n = g.num_vertices();
  HalfExtension ext;
  ext.eta.assign(n, 0);
  if (n == 0) return ext;
  const VertexId a = 0;
  ForestLabeling f = solve_kforest(g, k, IndegreeReserve::root(a));
  for (VertexId v = 0; v < n; ++v) {
    if (v != a) ext.eta[v] = f.deficit(v);
  }
  ext.eta[a] = complete_half_extension(g, k, ext.eta, a);
  return ext;
}

std::optional<HalfExtension> half_extension_fast_path(const Digraph& g, int k) {
  if (k < 1) throw InputError("connectivity target k must be at least 1");
  ForestLabeling f = solve_kforest(g, k);
  if (f.total_deficit() <= k) return std::nullopt;
  HalfExtension ext;
  ext.eta.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) ext.eta[v] = f.deficit(v);
  return ext;
}

Digraph ExtensionGraph::materialize() const {
  Digraph full(base->num_vertices() + 1);
  for (const Arc& a : base->arcs()) full.add_arc(a.tail, a.head);
  const VertexId s = special();
  for (VertexId u : into_special) full.add_arc(u, s);
  for (VertexId v : from_special) full.add_arc(s, v);
  return full;
}

ExtensionGraph build_extension(const Digraph& g, int k,
                               const HalfExtension& eta,
                               const HalfExtension& eta_rev) {
  if (k < 1) throw InputError("connectivity target k must be at least 1");
  if (static_cast<int>(eta.eta.size()) != g.num_vertices() ||
      static_cast<int>(eta_rev.eta.size()) != g.num_vertices()) {
    throw InputError("demand vector size does not match vertex count");
  }
  ExtensionGraph gx;
  gx.base = &g;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (int c = 0; c < eta.eta[v]; ++c) gx.from_special.push_back(v);
    for (int c = 0; c < eta_rev.eta[v]; ++c) gx.into_special.push_back(v);
  }
  // Balance the star with edges at vertex 0; any vertex works.
  long long out_total = eta.total();
  long long in_total = eta_rev.total();
  for (long long c = in_total; c < out_total; ++c) gx.into_special.push_back(0);
  for (long long c = out_total; c < in_total; ++c) gx.from_special.push_back(0);
  if (gx.into_special.size() != gx.from_special.size()) {
    throw InvariantError("extension star is unbalanced");
  }
  return gx;
}

namespace {

// Is there a vertex set A with {u,v} inside, s outside, A != V, whose
// entering-arc count is at most threshold? Such sets are exactly the
// ones a split could push below the connectivity requirement.
bool tight_set_exists(const std::vector<Arc>& arcs, int n_total, int s, int u,
                      int v, int threshold, SplitStats* stats) {
  auto build = [&](int extra_source) {
    FlowNetwork net(n_total);
    for (const Arc& a : arcs) {
      int tail = a.tail == v ? u : a.tail;
      int head = a.head == v ? u : a.head;
      if (extra_source >= 0) {
        if (tail == extra_source) tail = s;
        if (head == extra_source) head = s;
      }
      net.add_arc(tail, head, 1);
    }
    return net;
  };

  FlowNetwork net = build(-1);
  if (stats) stats->candidate_checks += 1;
  int flow = net.max_flow(s, u, threshold + 1);
  if (flow > threshold) return false;
  std::vector<char> sink_side = net.sink_side_minimal();
  int cover = 0;
  for (int w = 0; w < n_total; ++w) {
    if (w != s && w != v && sink_side[w]) ++cover;
  }
  if (cover < n_total - 2) return true;  // a proper tight set exists

  // Every minimum cut is the full vertex set; a tight proper set can
  // still hide at a higher cut value, so pin one vertex to the source
  // side at a time.
  for (int x = 0; x < n_total; ++x) {
    if (x == s || x == u || x == v) continue;
    FlowNetwork pinned = build(x);
    if (stats) stats->fallback_flows += 1;
    if (pinned.max_flow(s, u, threshold + 1) <= threshold) return true;
  }
  return false;
}

std::vector<Arc> reversed_arcs(const std::vector<Arc>& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back(Arc{a.head, a.tail});
  return out;
}

}  // namespace

std::vector<Arc> split_off_all(const ExtensionGraph& gx, int k,
                               const SplitOptions& opts, SplitStats* stats) {
  const Digraph& base = *gx.base;
  const int n = base.num_vertices();
  const int s = gx.special();

  std::vector<VertexId> in_star = gx.into_special;
  std::vector<VertexId> out_star = gx.from_special;
  if (in_star.size() != out_star.size()) {
    throw InputError("split requires a balanced star");
  }

  // Current graph: base arcs + committed replacements + remaining star.
  std::vector<Arc> arcs = base.arcs();
  std::vector<Arc> added;

  while (!in_star.empty()) {
    std::vector<Arc> current = arcs;
    for (VertexId u : in_star) current.push_back(Arc{u, s});
    for (VertexId v : out_star) current.push_back(Arc{s, v});
    std::vector<Arc> current_rev = reversed_arcs(current);

    const VertexId u = in_star.front();
    int partner = -1;
    for (size_t i = 0; i < out_star.size(); ++i) {
      const VertexId v = out_star[i];
      if (v == u) continue;
      // The split lowers cuts of sets holding both u and v on one side of
      // s; it is safe iff no such set sits at the connectivity bound.
      if (tight_set_exists(current, n + 1, s, u, v, k, stats)) continue;
      if (tight_set_exists(current_rev, n + 1, s, v, u, k, stats)) continue;
      partner = static_cast<int>(i);
      break;
    }
    if (partner < 0) {
      throw InvariantError("no admissible split partner for an in-star edge");
    }
    const VertexId v = out_star[partner];
    in_star.erase(in_star.begin());
    out_star.erase(out_star.begin() + partner);
    arcs.push_back(Arc{u, v});
    added.push_back(Arc{u, v});

    if (opts.validate_with_full_check) {
      Digraph check(n + 1);
      for (const Arc& a : arcs) check.add_arc(a.tail, a.head);
      for (VertexId w : in_star) check.add_arc(w, s);
      for (VertexId w : out_star) check.add_arc(s, w);
      if (!is_ks_connected(check, s, k)) {
        throw InvariantError("a committed split broke (k,s)-connectivity");
      }
    }
  }
  return added;
}

DirectedAugmentResult augment_directed(const Digraph& g, int k,
                                       const AugmentOptions& opts) {
  if (k < 1) throw InputError("connectivity target k must be at least 1");
  DirectedAugmentResult result;
  if (g.num_vertices() <= 1) {
    // Trivially strongly k-connected; nothing to add or split.
    result.verified = opts.verify_final;
    return result;
  }

  HalfExtension eta_in;
  if (auto fast = half_extension_fast_path(g, k)) {
    eta_in = std::move(*fast);
    result.fast_path_in = true;
  } else {
    eta_in = minimal_half_extension(g, k);
  }
  const Digraph rev = g.reversed();
  HalfExtension eta_out;
  if (auto fast = half_extension_fast_path(rev, k)) {
    eta_out = std::move(*fast);
    result.fast_path_out = true;
  } else {
    eta_out = minimal_half_extension(rev, k);
  }
  result.eta_in_total = eta_in.total();
  result.eta_out_total = eta_out.total();

  ExtensionGraph gx = build_extension(g, k, eta_in, eta_out);
  result.edges = split_off_all(gx, k, opts.split);
  result.gamma = static_cast<long long>(result.edges.size());
  if (result.gamma != std::max(result.eta_in_total, result.eta_out_total)) {
    throw InvariantError("split count disagrees with the extension degree");
  }

  if (opts.verify_final) {
    Digraph augmented(g.num_vertices());
    for (const Arc& a : g.arcs()) augmented.add_arc(a.tail, a.head);
    for (const Arc& a : result.edges) augmented.add_arc(a.tail, a.head);
    if (strong_connectivity(augmented, k) < k) {
      throw InvariantError("augmented graph failed the connectivity re-check");
    }
    result.verified = true;
  }
  return result;
}

}  // namespace forestaug
