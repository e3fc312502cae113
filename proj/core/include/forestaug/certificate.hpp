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
#include "forestaug/kforest.hpp"

namespace forestaug {

/// A family of pairwise-disjoint vertex sets witnessing optimality of a
/// forest labeling: each set A contributes k - reserve(A) - |entering(A)|
/// and the contributions sum to the labeling's total deficit exactly
/// when the labeling is optimal.
struct Certificate {
  std::vector<std::vector<VertexId>> sets;  // each sorted ascending
  std::vector<long long> set_values;
  long long total = 0;
};

/// The set of vertices touched by the edges reachable from v in the
/// exchange graph (just {v} when nothing is reachable). Requires that no
/// augmenting path starts at v; throws InputError if one exists. The
/// result is closed: all entering edges covered, every forest spanning
/// inside it.
VertexSet reachable_closed_set(const ForestLabeling& f, VertexId v);

/// True iff every edge entering a is covered and every forest restricted
/// to a is spanning (connected within a).
bool is_closed_set(const ForestLabeling& f, const VertexSet& a);

/// Closed sets around all deficient vertices, merged until disjoint.
/// Requires an optimal labeling (no augmenting paths); throws InputError
/// otherwise. The result covers every deficient vertex and its total
/// equals the labeling's total deficit.
Certificate optimal_subpartition(const ForestLabeling& f);

struct MinMaxReport {
  long long deficit_total = 0;
  long long certificate_total = 0;
  bool optimal = false;  // the two totals are equal
};

/// Recomputes every set value of cert from the graph and compares the
/// certificate total with the labeling's total deficit. Throws
/// InputError if the sets overlap, contain out-of-range vertices, or
/// carry values that do not match the graph.
MinMaxReport verify_minmax(const ForestLabeling& f, const Certificate& cert);

struct AlphaValues {
  long long alpha_in = 0;
  long long alpha_out = 0;
  /// When false the numbers are only upper bounds (the instance was too
  /// large to enumerate and the solver route could not pin them down).
  bool exact = false;
};

/// Maxima of sum(k - |boundary|) over proper subpartitions, for entering
/// and leaving boundaries. Exact by enumeration for small n; otherwise
/// derived from a plain k-forest solve, which is exact only when the
/// total deficit exceeds k.
AlphaValues alpha_values(const Digraph& g, int k);

}  // namespace forestaug
