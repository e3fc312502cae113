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

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forestaug {

using VertexId = int;
using EdgeId = int;

/// Thrown for malformed user input: bad files, out-of-range ids, invalid
/// parameters. Maps to exit code 2 in the CLI.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal invariant is violated; indicates a bug rather
/// than bad input. Maps to exit code 3 in the CLI.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

struct Arc {
  VertexId tail;
  VertexId head;

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.tail == b.tail && a.head == b.head;
  }
};

/// Directed multigraph. Parallel arcs are kept as distinct edge ids;
/// self-loops are rejected at construction time.
class Digraph {
 public:
  explicit Digraph(int n);

  /// Appends an arc and returns its id. Throws InputError on a self-loop
  /// or an out-of-range endpoint.
  EdgeId add_arc(VertexId tail, VertexId head);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(EdgeId e) const { return arcs_[e]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Ids of arcs with head v.
  const std::vector<EdgeId>& in_arcs(VertexId v) const { return in_[v]; }
  /// Ids of arcs with tail v.
  const std::vector<EdgeId>& out_arcs(VertexId v) const { return out_[v]; }

  /// Graph with every arc orientation flipped; arc ids are preserved.
  Digraph reversed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
};

/// Undirected multigraph with the same id conventions as Digraph.
class UGraph {
 public:
  explicit UGraph(int n);

  EdgeId add_edge(VertexId u, VertexId v);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Replaces each undirected edge {u,v} with the two arcs (u,v),(v,u).
/// Edge i of the input becomes arcs 2i and 2i+1 of the output, so for
/// every vertex set the directed in-boundary of the result has the same
/// size as the undirected boundary of the input.
Digraph doubled(const UGraph& g);

/// Subset of a fixed vertex range [0, n).
class VertexSet {
 public:
  explicit VertexSet(int n) : member_(n, 0) {}

  static VertexSet of(int n, std::initializer_list<VertexId> vs);

  void insert(VertexId v);
  bool contains(VertexId v) const { return member_[v] != 0; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  int universe_size() const { return static_cast<int>(member_.size()); }

  /// Members in increasing order.
  std::vector<VertexId> items() const;

 private:
  std::vector<char> member_;
  int count_ = 0;
};

enum class Boundary {
  Entering,  // arcs (u,v) with u outside A, v inside A
  Leaving,   // arcs (u,v) with u inside A, v outside A
  Internal,  // arcs with both endpoints inside A
};

/// Arc ids of the requested boundary class, in increasing id order.
std::vector<EdgeId> boundary(const Digraph& g, const VertexSet& a, Boundary kind);

/// |boundary(g, a, kind)| without materializing the list.
int boundary_size(const Digraph& g, const VertexSet& a, Boundary kind);

/// Size of the undirected boundary of a in g.
int cut_size(const UGraph& g, const VertexSet& a);

}  // namespace forestaug
