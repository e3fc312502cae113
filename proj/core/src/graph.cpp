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

#include "forestaug/graph.hpp"

namespace forestaug {

namespace {

void check_vertex(VertexId v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw InputError(std::string(what) + " vertex id " + std::to_string(v) +
                     " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Digraph::Digraph(int n) : n_(n), in_(n), out_(n) {
  if (n < 0) throw InputError("negative vertex count");
}

EdgeId Digraph::add_arc(VertexId tail, VertexId head) {
  check_vertex(tail, n_, "arc tail");
  check_vertex(head, n_, "arc head");
  if (tail == head) {
    throw InputError("self-loop at vertex " + std::to_string(tail) +
                     " is not allowed");
  }
  EdgeId id = static_cast<EdgeId>(arcs_.size());
  arcs_.push_back(Arc{tail, head});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

Digraph Digraph::reversed() const {
  Digraph r(n_);
  for (const Arc& a : arcs_) r.add_arc(a.head, a.tail);
  return r;
}

UGraph::UGraph(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
}

EdgeId UGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u, n_, "edge endpoint");
  check_vertex(v, n_, "edge endpoint");
  if (u == v) {
    throw InputError("self-loop at vertex " + std::to_string(u) +
                     " is not allowed");
  }
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.emplace_back(u, v);
  return id;
}

Digraph doubled(const UGraph& g) {
  Digraph d(g.num_vertices());
  for (const auto& [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

VertexSet VertexSet::of(int n, std::initializer_list<VertexId> vs) {
  VertexSet s(n);
  for (VertexId v : vs) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v < 0 || v >= universe_size()) {
    throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(universe_size()) + ")");
  }
  if (!member_[v]) {
    member_[v] = 1;
    ++count_;
  }
}

std::vector<VertexId> VertexSet::items() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (VertexId v = 0; v < universe_size(); ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

namespace {

bool matches(const Arc& a, const VertexSet& s, Boundary kind) {
  bool tail_in = s.contains(a.tail);
  bool head_in = s.contains(a.head);
  switch (kind) {
    case Boundary::Entering:
      return !tail_in && head_in;
    case Boundary::Leaving:
      return tail_in && !head_in;
    case Boundary::Internal:
      return tail_in && head_in;
  }
  return false;
}

}  // namespace

std::vector<EdgeId> boundary(const Digraph& g, const VertexSet& a, Boundary kind) {
  if (a.universe_size() != g.num_vertices()) {
    throw InputError("vertex set universe does not match graph");
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    if (matches(g.arc(e), a, kind)) out.push_back(e);
  }
  return out;
}

int boundary_size(const Digraph& g, const VertexSet& a, Boundary kind) {
  if (a.universe_size() != g.num_vertices()) {
    throw InputError("vertex set universe does not match graph");
  }
  int count = 0;
  for (EdgeId e = 0; e < g.num_arcs(); ++e) {
    if (matches(g.arc(e), a, kind)) ++count;
  }
  return count;
}

int cut_size(const UGraph& g, const VertexSet& a) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    if (a.contains(u) != a.contains(v)) ++count;
  }
  return count;
}

}  // namespace forestaug
