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

#include <utility>
#include <vector>

#include "forestaug/directed_augment.hpp"
#include "forestaug/graph.hpp"

namespace forestaug {

/// Minimal k-extension of an undirected graph: per-vertex demands with
/// |cut(A)| + eta(A) >= k for all proper nonempty A, no coordinate
/// decrementable. Computed as a minimal k-half-extension of the doubled
/// digraph. Requires k >= 2 (k = 1 is plain component patching).
HalfExtension minimal_k_extension(const UGraph& gu, int k);

/// Exact optimum of the undirected augmentation problem for small n by
/// proper-subpartition enumeration: ceil(max sum(k - |cut(A)|) / 2).
/// Requires k >= 2; refuses n > 14.
long long cai_sun_value(const UGraph& gu, int k);

struct UndirectedAugmentResult {
  std::vector<std::pair<VertexId, VertexId>> edges;
  long long gamma = 0;
  long long eta_total = 0;  // after the parity fix; gamma = eta_total / 2
  bool parity_bumped = false;
  bool fast_path = false;
  bool verified = false;
};

struct UndirectedAugmentOptions {
  bool verify_final = false;
  SplitOptions split;
};

/// Minimum set of undirected edges whose addition makes gu
/// k-edge-connected. For k >= 2: minimal k-extension, parity fix at
/// vertex 0, then star splitting; for k = 1: one edge per extra
/// connected component.
UndirectedAugmentResult augment_undirected(
    const UGraph& gu, int k, const UndirectedAugmentOptions& opts = {});

}  // namespace forestaug
