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

#include "forestaug/certificate.hpp"

#include <algorithm>
#include <string>

#include "forestaug/oracle.hpp"
#include "forestaug/union_find.hpp"

namespace forestaug {

namespace {

long long closed_set_value(const ForestLabeling& f, const VertexSet& a) {
  long long reserve_total = 0;
  for (VertexId v : a.items()) reserve_total += f.reserve_at(v);
  return f.k() - reserve_total -
         boundary_size(f.graph(), a, Boundary::Entering);
}

}  // namespace

VertexSet reachable_closed_set(const ForestLabeling& f, VertexId v) {
  const Digraph& g = f.graph();
  if (v < 0 || v >= g.num_vertices()) {
    throw InputError("vertex id out of range");
  }
  std::vector<char> edge_seen(g.num_arcs(), 0);
  std::vector<EdgeId> queue;
  for (const ExchangeNode& s :
       exchange_successors(f, ExchangeNode::vertex(v))) {
    if (!edge_seen[s.id]) {
      edge_seen[s.id] = 1;
      queue.push_back(s.id);
    }
  }
  for (size_t at = 0; at < queue.size(); ++at) {
    EdgeId e = queue[at];
    for (const ExchangeNode& s : exchange_successors(f, ExchangeNode::edge(e))) {
      if (s.kind == ExchangeNode::Kind::Target) {
        throw InputError("an augmenting path starts at vertex " +
                         std::to_string(v + 1) +
                         "; closed sets exist only once searches fail");
      }
      if (!edge_seen[s.id]) {
        edge_seen[s.id] = 1;
        queue.push_back(s.id);
      }
    }
  }
  VertexSet out(g.num_vertices());
  out.insert(v);
  for (EdgeId e : queue) {
    out.insert(g.arc(e).tail);
    out.insert(g.arc(e).head);
  }
  return out;
}

bool is_closed_set(const ForestLabeling& f, const VertexSet& a) {
  const Digraph& g = f.graph();
  for (EdgeId e : boundary(g, a, Boundary::Entering)) {
    if (!f.covered(e)) return false;
  }
  // Each forest must connect a using only internal edges.
  std::vector<VertexId> items = a.items();
  if (items.size() <= 1) return true;
  for (int j = 1; j <= f.k(); ++j) {
    UnionFind uf(g.num_vertices());
    int parts = static_cast<int>(items.size());
    for (EdgeId e : boundary(g, a, Boundary::Internal)) {
      if (f.label(e) != j) continue;
      if (uf.unite(g.arc(e).tail, g.arc(e).head)) --parts;
    }
    if (parts != 1) return false;
  }
  return true;
}

Certificate optimal_subpartition(const ForestLabeling& f) {
  const Digraph& g = f.graph();
  const int n = g.num_vertices();

  std::vector<std::vector<char>> families;
  for (VertexId v = 0; v < n; ++v) {
    if (f.deficit(v) <= 0) continue;
    VertexSet q = reachable_closed_set(f, v);
    std::vector<char> mask(n, 0);
    for (VertexId u : q.items()) mask[u] = 1;
    families.push_back(std::move(mask));
  }

  // Merge overlapping sets until the family is disjoint. Closedness is
  // preserved under union, which we re-check as we go.
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < families.size() && !merged; ++i) {
      for (size_t j = i + 1; j < families.size() && !merged; ++j) {
        bool overlap = false;
        for (int v = 0; v < n && !overlap; ++v) {
          overlap = families[i][v] && families[j][v];
        }
        if (!overlap) continue;
        for (int v = 0; v < n; ++v) families[i][v] |= families[j][v];
        families.erase(families.begin() + static_cast<long>(j));
        merged = true;
      }
    }
  }

  Certificate cert;
  for (const auto& mask : families) {
    VertexSet a(n);
    for (int v = 0; v < n; ++v) {
      if (mask[v]) a.insert(v);
    }
    if (!is_closed_set(f, a)) {
      throw InvariantError("merged certificate set is not closed");
    }
    long long deficit = 0;
    for (VertexId v : a.items()) deficit += f.deficit(v);
    long long value = closed_set_value(f, a);
    if (value != deficit) {
      throw InvariantError("closed-set value disagrees with its deficit");
    }
    if (deficit <= 0) {
      throw InvariantError("certificate set has non-positive deficit");
    }
    cert.sets.push_back(a.items());
    cert.set_values.push_back(value);
    cert.total += value;
  }
  return cert;
}

MinMaxReport verify_minmax(const ForestLabeling& f, const Certificate& cert) {
  const Digraph& g = f.graph();
  const int n = g.num_vertices();
  std::vector<char> used(n, 0);
  MinMaxReport report;
  report.deficit_total = f.total_deficit();
  for (size_t i = 0; i < cert.sets.size(); ++i) {
    VertexSet a(n);
    for (VertexId v : cert.sets[i]) {
      if (v < 0 || v >= n) throw InputError("certificate vertex out of range");
      if (used[v]) throw InputError("certificate sets are not disjoint");
      used[v] = 1;
      a.insert(v);
    }
    if (a.empty()) throw InputError("certificate contains an empty set");
    long long value = closed_set_value(f, a);
    if (i < cert.set_values.size() && cert.set_values[i] != value) {
      throw InputError("certificate value for set " + std::to_string(i + 1) +
                       " does not match the graph");
    }
    report.certificate_total += value;
  }
  if (report.certificate_total > report.deficit_total) {
    // Weak duality: no disjoint family can beat the deficit.
    throw InvariantError("certificate total exceeds the deficit bound");
  }
  report.optimal = report.certificate_total == report.deficit_total;
  return report;
}

AlphaValues alpha_values(const Digraph& g, int k) {
  AlphaValues out;
  const std::vector<int> no_reserve(g.num_vertices(), 0);
  if (g.num_vertices() <= 12) {
    out.alpha_in = brute_subpartition_max(g, k, no_reserve, true);
    out.alpha_out = brute_subpartition_max(g.reversed(), k, no_reserve, true);
    out.exact = true;
    return out;
  }
  // Solver route: when the total deficit exceeds k the optimal
  // subpartition is proper, so it equals the deficit; otherwise the
  // deficit is only an upper bound.
  const Digraph rev = g.reversed();
  ForestLabeling fin = solve_kforest(g, k);
  ForestLabeling fout = solve_kforest(rev, k);
  out.alpha_in = fin.total_deficit();
  out.alpha_out = fout.total_deficit();
  out.exact = out.alpha_in > k && out.alpha_out > k;
  return out;
}

}  // namespace forestaug
