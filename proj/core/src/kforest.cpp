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

#include "forestaug/kforest.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace forestaug {

namespace {

void check_k(const Digraph& g, int k) {
  if (k < 1) throw InputError("forest count k must be at least 1");
  // k is polynomially bounded in the graph size; reject degenerate asks.
  long long budget = static_cast<long long>(k) * std::max(g.num_vertices(), 1);
  if (budget > 200'000'000LL) {
    throw InputError("forest count k is too large for this graph size");
  }
}

}  // namespace

ForestLabeling::ForestLabeling(const Digraph& g, int k, IndegreeReserve reserve)
    : g_(&g), k_(k), reserve_(reserve) {
  check_k(g, k);
  if (reserve.is_root() && reserve.root_vertex() >= g.num_vertices()) {
    throw InputError("reserve root vertex out of range");
  }
  label_.assign(g.num_arcs(), 0);
  indeg_.assign(g.num_vertices(), 0);
  uf_.assign(k + 1, UnionFind(g.num_vertices()));
  adj_.assign(k + 1, std::vector<std::vector<EdgeId>>(g.num_vertices()));
}

ForestLabeling ForestLabeling::from_labels(const Digraph& g, int k,
                                           IndegreeReserve reserve,
                                           const std::vector<int>& labels) {
  ForestLabeling f(g, k, reserve);
  if (static_cast<int>(labels.size()) != g.num_arcs()) {
    throw InputError("label vector size does not match arc count");
  }
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    int lab = labels[e];
    if (lab < 0 || lab > k) {
      throw InputError("edge " + std::to_string(e + 1) + ": label " +
                       std::to_string(lab) + " out of range [0, " +
                       std::to_string(k) + "]");
    }
    if (lab == 0) continue;
    const Arc& a = g.arc(e);
    if (!f.uf_[lab].unite(a.tail, a.head)) {
      throw InputError("forest " + std::to_string(lab) +
                       " contains a cycle through edge " + std::to_string(e + 1));
    }
    f.adj_[lab][a.tail].push_back(e);
    f.adj_[lab][a.head].push_back(e);
    f.label_[e] = lab;
    f.indeg_[a.head] += 1;
    f.size_ += 1;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (f.deficit(v) < 0) {
      throw InputError("vertex " + std::to_string(v + 1) +
                       " exceeds its indegree budget");
    }
  }
  return f;
}

long long ForestLabeling::total_deficit() const {
  long long total = 0;
  for (VertexId v = 0; v < g_->num_vertices(); ++v) total += deficit(v);
  return total;
}

bool ForestLabeling::is_joining(int forest, EdgeId e) const {
  if (label_[e] == forest) return false;
  const Arc& a = g_->arc(e);
  return !uf_[forest].same(a.tail, a.head);
}

int ForestLabeling::min_joining_forest(EdgeId e) const {
  for (int j = 1; j <= k_; ++j) {
    if (is_joining(j, e)) return j;
  }
  return 0;
}

std::vector<EdgeId> ForestLabeling::forest_path(int forest, VertexId u,
                                                VertexId w) const {
  if (u == w) return {};
  const int n = g_->num_vertices();
  std::vector<EdgeId> pred_edge(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<VertexId> queue;
  queue.push(u);
  seen[u] = 1;
  while (!queue.empty() && !seen[w]) {
    VertexId x = queue.front();
    queue.pop();
    for (EdgeId e : adj_[forest][x]) {
      const Arc& a = g_->arc(e);
      VertexId y = a.tail == x ? a.head : a.tail;
      if (!seen[y]) {
        seen[y] = 1;
        pred_edge[y] = e;
        queue.push(y);
      }
    }
  }
  if (!seen[w]) return {};
  std::vector<EdgeId> path;
  for (VertexId x = w; x != u;) {
    EdgeId e = pred_edge[x];
    path.push_back(e);
    const Arc& a = g_->arc(e);
    x = a.tail == x ? a.head : a.tail;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

#ifdef FORESTAUG_DEBUG_CHECKS
namespace {

// Expensive structural audit of a path before it is applied: every
// consecutive pair must be an exchange-graph arc, no earlier element may
// reach a later non-adjacent one, and only the final edge may join.
void debug_check_path(const ForestLabeling& f, const AugmentingPath& path) {
  const Digraph& g = f.graph();
  const int r = static_cast<int>(path.edges.size());
  if (g.arc(path.edges.front()).head != path.start ||
      f.deficit(path.start) <= 0) {
    throw InvariantError("path does not start at a deficient head vertex");
  }
  std::vector<char> seen_edge(g.num_arcs(), 0);
  for (EdgeId e : path.edges) {
    if (seen_edge[e]) throw InvariantError("path repeats an edge");
    seen_edge[e] = 1;
  }
  auto is_arc = [&](EdgeId from, EdgeId to) {
    for (const ExchangeNode& s : exchange_successors(f, ExchangeNode::edge(from))) {
      if (s.kind == ExchangeNode::Kind::Edge && s.id == to) return true;
    }
    return false;
  };
  for (int j = 1; j < r; ++j) {
    if (!f.covered(path.edges[j]) && g.arc(path.edges[j]).head == path.start) {
      throw InvariantError("path has a shortcut from its start vertex");
    }
  }
  for (int i = 0; i + 1 < r; ++i) {
    if (!is_arc(path.edges[i], path.edges[i + 1])) {
      throw InvariantError("consecutive path elements are not an exchange arc");
    }
    if (!f.covered(path.edges[i]) && !f.covered(path.edges[i + 1])) {
      throw InvariantError("two consecutive uncovered edges on a path");
    }
    if (f.min_joining_forest(path.edges[i]) != 0) {
      throw InvariantError("interior path edge could end the path early");
    }
    for (int j = i + 2; j < r; ++j) {
      if (is_arc(path.edges[i], path.edges[j])) {
        throw InvariantError("path has a shortcut");
      }
    }
  }
}

}  // namespace
#endif

void ForestLabeling::apply_augmentation(const AugmentingPath& path) {
  if (path.edges.empty()) throw InvariantError("empty augmenting path");
  if (path.target_forest < 1 || path.target_forest > k_) {
    throw InvariantError("augmenting path targets forest " +
                         std::to_string(path.target_forest));
  }
  if (label_[path.edges.front()] != 0) {
    throw InvariantError("augmenting path must start with an uncovered edge");
  }
  EdgeId last = path.edges.back();
  if (!is_joining(path.target_forest, last)) {
    throw InvariantError("final path edge is not joining for the target forest");
  }
#ifdef FORESTAUG_DEBUG_CHECKS
  debug_check_path(*this, path);
#endif

  const int r = static_cast<int>(path.edges.size());
  std::vector<int> old_label(r);
  for (int i = 0; i < r; ++i) old_label[i] = label_[path.edges[i]];

  int covered_delta = 0;
  for (int i = 0; i < r; ++i) {
    EdgeId e = path.edges[i];
    int neu = (i + 1 < r) ? old_label[i + 1] : path.target_forest;
    int old = old_label[i];
    if (old == neu) continue;
    const Arc& a = g_->arc(e);
    if (old != 0) {
      auto detach = [&](std::vector<EdgeId>& lst) {
        auto it = std::find(lst.begin(), lst.end(), e);
        if (it == lst.end()) {
          throw InvariantError("forest adjacency is out of sync");
        }
        *it = lst.back();
        lst.pop_back();
      };
      detach(adj_[old][a.tail]);
      detach(adj_[old][a.head]);
    }
    if (neu != 0) {
      adj_[neu][a.tail].push_back(e);
      adj_[neu][a.head].push_back(e);
    }
    if (old == 0 && neu != 0) {
      indeg_[a.head] += 1;
      ++covered_delta;
    } else if (old != 0 && neu == 0) {
      indeg_[a.head] -= 1;
      --covered_delta;
    }
    label_[e] = neu;
  }
  if (covered_delta != 1) {
    throw InvariantError("augmentation did not grow the solution by one edge");
  }
  const Arc& joined = g_->arc(last);
  uf_[path.target_forest].unite(joined.tail, joined.head);
  size_ += 1;
}

ForestLabeling ForestLabeling::extended_to(int new_k) const {
  if (new_k < k_) throw InputError("cannot shrink a labeling");
  return from_labels(*g_, new_k, reserve_, label_);
}

void ForestLabeling::validate() const {
  const Digraph& g = *g_;
  int covered = 0;
  std::vector<int> indeg(g.num_vertices(), 0);
  std::vector<UnionFind> uf(k_ + 1, UnionFind(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    int lab = label_[e];
    if (lab < 0 || lab > k_) throw InvariantError("label out of range");
    if (lab == 0) continue;
    const Arc& a = g.arc(e);
    if (!uf[lab].unite(a.tail, a.head)) {
      throw InvariantError("forest " + std::to_string(lab) + " has a cycle");
    }
    indeg[a.head] += 1;
    ++covered;
  }
  if (covered != size_) throw InvariantError("cached size is stale");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (indeg[v] != indeg_[v]) throw InvariantError("cached indegree is stale");
    if (deficit(v) < 0) throw InvariantError("indegree budget exceeded");
  }
  for (int j = 1; j <= k_; ++j) {
    if (uf[j].num_components() != uf_[j].num_components()) {
      throw InvariantError("component count mismatch in forest " +
                           std::to_string(j));
    }
    long long adj_entries = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (EdgeId e : adj_[j][v]) {
        const Arc& a = g.arc(e);
        if (label_[e] != j || (a.tail != v && a.head != v)) {
          throw InvariantError("forest adjacency is stale");
        }
      }
      adj_entries += static_cast<long long>(adj_[j][v].size());
    }
    for (EdgeId e = 0; e < g.num_arcs(); ++e) {
      if (label_[e] == j) {
        const Arc& a = g.arc(e);
        if (!uf_[j].same(a.tail, a.head)) {
          throw InvariantError("cached components are stale");
        }
        adj_entries -= 2;
      }
    }
    if (adj_entries != 0) throw InvariantError("forest adjacency is stale");
  }
}

bool ForestLabeling::is_nested() const {
  for (int j = 2; j <= k_; ++j) {
    for (EdgeId e = 0; e < g_->num_arcs(); ++e) {
      if (label_[e] != j) continue;
      const Arc& a = g_->arc(e);
      if (!uf_[j - 1].same(a.tail, a.head)) return false;
    }
  }
  return true;
}

std::vector<ExchangeNode> exchange_successors(const ForestLabeling& f,
                                              const ExchangeNode& node) {
  const Digraph& g = f.graph();
  std::vector<ExchangeNode> out;
  switch (node.kind) {
    case ExchangeNode::Kind::Vertex: {
      VertexId v = node.id;
      if (f.deficit(v) <= 0) return out;
      for (EdgeId e : g.in_arcs(v)) {
        if (!f.covered(e)) out.push_back(ExchangeNode::edge(e));
      }
      return out;
    }
    case ExchangeNode::Kind::Edge: {
      EdgeId e = node.id;
      if (f.min_joining_forest(e) > 0) out.push_back(ExchangeNode::target());
      if (f.covered(e)) {
        for (EdgeId f2 : g.in_arcs(g.arc(e).head)) {
          if (!f.covered(f2)) out.push_back(ExchangeNode::edge(f2));
        }
      }
      std::vector<char> emitted(g.num_arcs(), 0);
      const Arc& a = g.arc(e);
      for (int j = 1; j <= f.k(); ++j) {
        if (f.label(e) == j) continue;
        if (f.is_joining(j, e)) {
          // Swapping e for any edge of the forest keeps it acyclic.
          for (EdgeId e2 = 0; e2 < g.num_arcs(); ++e2) {
            if (f.label(e2) == j && !emitted[e2]) {
              emitted[e2] = 1;
              out.push_back(ExchangeNode::edge(e2));
            }
          }
        } else {
          for (EdgeId e2 : f.forest_path(j, a.tail, a.head)) {
            if (!emitted[e2]) {
              emitted[e2] = 1;
              out.push_back(ExchangeNode::edge(e2));
            }
          }
        }
      }
      return out;
    }
    case ExchangeNode::Kind::Target:
      return out;
  }
  return out;
}

PathSearcher::PathSearcher(const ForestLabeling& f) : f_(&f) {
  const Digraph& g = f.graph();
  edge_seen_.assign(g.num_arcs(), -1);
  pred_.assign(g.num_arcs(), -1);
  forests_.resize(f.k() + 1);
  for (int j = 1; j <= f.k(); ++j) {
    ForestScratch& fs = forests_[j];
    fs.parent_vertex.assign(g.num_vertices(), -1);
    fs.parent_edge.assign(g.num_vertices(), -1);
    fs.depth.assign(g.num_vertices(), 0);
    fs.link.assign(g.num_vertices(), 0);
    fs.class_top.assign(g.num_vertices(), 0);
  }
}

void PathSearcher::ensure_forest_built(int forest) {
  ForestScratch& fs = forests_[forest];
  if (fs.built_epoch == epoch_) return;
  fs.built_epoch = epoch_;
  const Digraph& g = f_->graph();
  const int n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    fs.parent_vertex[v] = -1;
    fs.parent_edge[v] = -1;
    fs.depth[v] = -1;
    fs.link[v] = v;
    fs.class_top[v] = v;
  }
  // Root each component and record parent pointers.
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (fs.depth[root] >= 0) continue;
    fs.depth[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : f_->forest_adjacency(forest, x)) {
        const Arc& a = f_->graph().arc(e);
        VertexId y = a.tail == x ? a.head : a.tail;
        if (fs.depth[y] >= 0) continue;
        fs.depth[y] = fs.depth[x] + 1;
        fs.parent_vertex[y] = x;
        fs.parent_edge[y] = e;
        stack.push_back(y);
      }
    }
  }
}

int PathSearcher::find_class(ForestScratch& fs, int v) {
  int root = v;
  while (fs.link[root] != root) root = fs.link[root];
  while (fs.link[v] != root) {
    int next = fs.link[v];
    fs.link[v] = root;
    v = next;
  }
  return root;
}

VertexId PathSearcher::top_of(ForestScratch& fs, VertexId v) {
  return fs.class_top[find_class(fs, v)];
}

void PathSearcher::walk_forest_path(int forest, VertexId u, VertexId w,
                                    EdgeId pred) {
  ensure_forest_built(forest);
  ForestScratch& fs = forests_[forest];
  VertexId a = top_of(fs, u);
  VertexId b = top_of(fs, w);
  while (a != b) {
    if (fs.depth[a] < fs.depth[b]) std::swap(a, b);
    VertexId pv = fs.parent_vertex[a];
    EdgeId pe = fs.parent_edge[a];
    if (pv < 0) {
      throw InvariantError("forest path walk crossed a component boundary");
    }
    if (edge_seen_[pe] != epoch_) {
      edge_seen_[pe] = epoch_;
      pred_[pe] = pred;
      queue_.push_back(pe);
    }
    // Collapse a's class into its parent's class; the segment between
    // them is now fully visited.
    int ca = find_class(fs, a);
    int cp = find_class(fs, pv);
    fs.link[ca] = cp;
    a = fs.class_top[cp];
  }
}

AugmentingPath PathSearcher::build_path(VertexId start, EdgeId last,
                                        int target) const {
  AugmentingPath path;
  path.start = start;
  path.target_forest = target;
  for (EdgeId e = last; e >= 0; e = pred_[e]) path.edges.push_back(e);
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

std::optional<AugmentingPath> PathSearcher::from(VertexId v) {
  const ForestLabeling& f = *f_;
  const Digraph& g = f.graph();
  ++epoch_;
  queue_.clear();
  if (f.deficit(v) <= 0) return std::nullopt;
  for (EdgeId e : g.in_arcs(v)) {
    if (f.covered(e) || edge_seen_[e] == epoch_) continue;
    edge_seen_[e] = epoch_;
    pred_[e] = -1;
    queue_.push_back(e);
  }
  for (size_t at = 0; at < queue_.size(); ++at) {
    EdgeId e = queue_[at];
    int target = f.min_joining_forest(e);
    if (target > 0) return build_path(v, e, target);
    const Arc& a = g.arc(e);
    if (f.covered(e)) {
      for (EdgeId f2 : g.in_arcs(a.head)) {
        if (f.covered(f2) || edge_seen_[f2] == epoch_) continue;
        edge_seen_[f2] = epoch_;
        pred_[f2] = e;
        queue_.push_back(f2);
      }
    }
    // e is joining for no forest, so its endpoints are connected inside
    // every forest it does not belong to.
    for (int j = 1; j <= f.k(); ++j) {
      if (f.label(e) == j) continue;
      walk_forest_path(j, a.tail, a.head, e);
    }
  }
  return std::nullopt;
}

namespace {

// One round-structured growth pass for the last forest (the level loop
// body). Components with pending deficit are visited in ascending order
// of their smallest vertex; a component merged into an already-visited
// one is skipped for the rest of the round.
void run_level(ForestLabeling& f, const SolveOptions& opts, SolveStats* stats) {
  const Digraph& g = f.graph();
  const int n = g.num_vertices();
  const int level = f.k();
  PathSearcher searcher(f);

  std::vector<long long> pending(n, 0);
  long long total_pending = 0;
  for (VertexId v = 0; v < n; ++v) {
    pending[v] = f.deficit(v);
    total_pending += pending[v];
  }

  long long rounds = 0;
  std::vector<std::vector<VertexId>> members(n);
  std::vector<int> touched_roots;
  std::vector<char> root_searched(n, 0);

  auto check_component_deficits = [&]() {
    if (!opts.check_component_deficits || stats == nullptr) return;
    stats->deficit_checks += 1;
    std::vector<long long> comp_def(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      comp_def[f.component_root(level, v)] += f.deficit(v);
    }
    for (VertexId r = 0; r < n; ++r) {
      if (comp_def[r] > level) stats->deficit_violations += 1;
    }
  };

  while (total_pending > 0) {
    if (f.num_components(level) == 1) break;  // spanning: nothing left to gain
    ++rounds;

    // Snapshot the components that still owe searches.
    std::vector<int> roots;
    for (VertexId v = 0; v < n; ++v) members[v].clear();
    for (VertexId v = 0; v < n; ++v) {
      int r = f.component_root(level, v);
      if (members[r].empty()) roots.push_back(r);
      members[r].push_back(v);
    }
    std::vector<std::pair<VertexId, int>> order;  // (smallest vertex, root)
    for (int r : roots) {
      long long comp_pending = 0;
      for (VertexId v : members[r]) comp_pending += pending[v];
      if (comp_pending > 0) order.emplace_back(members[r].front(), r);
    }
    std::sort(order.begin(), order.end());

    touched_roots.clear();
    auto mark = [&](int root) {
      root_searched[root] = 1;
      touched_roots.push_back(root);
    };

    for (const auto& [min_vertex, snapshot_root] : order) {
      int current_root = f.component_root(level, min_vertex);
      if (root_searched[current_root]) continue;  // merged into a searched one
      VertexId start = -1;
      for (VertexId v : members[snapshot_root]) {
        if (pending[v] > 0) {
          start = v;
          break;
        }
      }
      if (start < 0) continue;
      if (auto path = searcher.from(start)) {
        f.apply_augmentation(*path);
        pending[start] -= 1;
        total_pending -= 1;
        if (stats) stats->augmentations += 1;
        if (opts.validate_each_step) f.validate();
#ifdef FORESTAUG_DEBUG_CHECKS
        f.validate();
        if (!f.is_nested()) {
          throw InvariantError("augmentation broke the nestedness condition");
        }
#endif
        check_component_deficits();
        mark(f.component_root(level, start));
        if (f.num_components(level) == 1) break;
      } else {
        total_pending -= pending[start];
        pending[start] = 0;
        if (stats) stats->failed_searches += 1;
        mark(current_root);
      }
    }
    for (int r : touched_roots) root_searched[r] = 0;
  }

  if (stats) stats->rounds_per_level.push_back(rounds);
}

ForestLabeling solve_plain(const Digraph& g, int k, const SolveOptions& opts,
                           SolveStats* stats) {
  ForestLabeling f(g, 1);
  grow_last_forest(f, opts, stats);
  for (int level = 2; level <= k; ++level) {
    f = f.extended_to(level);
    grow_last_forest(f, opts, stats);
  }
  return f;
}

}  // namespace

void grow_last_forest(ForestLabeling& f, const SolveOptions& opts,
                      SolveStats* stats) {
  run_level(f, opts, stats);
}

ForestLabeling solve_kforest(const Digraph& g, int k, IndegreeReserve reserve,
                             const SolveOptions& opts, SolveStats* stats) {
  check_k(g, k);
  if (!reserve.is_root()) return solve_plain(g, k, opts, stats);

  VertexId root = reserve.root_vertex();
  if (root >= g.num_vertices()) {
    throw InputError("reserve root vertex out of range");
  }
  // With a full reservation at the root no in-edge of it can ever be
  // covered, so drop them and solve without the reservation.
  Digraph stripped(g.num_vertices());
  std::vector<EdgeId> original_id;
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    const Arc& a = g.arc(e);
    if (a.head == root) continue;
    stripped.add_arc(a.tail, a.head);
    original_id.push_back(e);
  }
  ForestLabeling inner = solve_plain(stripped, k, opts, stats);
  std::vector<int> labels(g.num_arcs(), 0);
  for (EdgeId e = 0; e < stripped.num_arcs(); ++e) {
    labels[original_id[e]] = inner.label(e);
  }
  return ForestLabeling::from_labels(g, k, reserve, labels);
}

}  // namespace forestaug
