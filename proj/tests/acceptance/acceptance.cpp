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

// Acceptance suite: each criterion prints one PASS/FAIL line. Run with a
// criterion number to execute only that one, or with no arguments for
// all nine.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "forestaug/certificate.hpp"
#include "forestaug/directed_augment.hpp"
#include "forestaug/kforest.hpp"
#include "forestaug/mincut.hpp"
#include "forestaug/oracle.hpp"
#include "forestaug/random_graph.hpp"
#include "forestaug/undirected_augment.hpp"

using namespace forestaug;

namespace {

// Every directed multigraph with the given vertex count, up to max_arcs
// arcs and per-pair multiplicity at most 2.
void for_each_small_digraph(int n, int max_arcs,
                            const std::function<void(const Digraph&)>& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) slots.emplace_back(u, v);
    }
  }
  std::vector<int> mult(slots.size(), 0);
  auto rec = [&](auto&& self, size_t at, int left) -> void {
    if (at == slots.size()) {
      Digraph g(n);
      for (size_t i = 0; i < slots.size(); ++i) {
        for (int c = 0; c < mult[i]; ++c) {
          g.add_arc(slots[i].first, slots[i].second);
        }
      }
      fn(g);
      return;
    }
    for (int take = 0; take <= std::min(2, left); ++take) {
      mult[at] = take;
      self(self, at + 1, left - take);
    }
    mult[at] = 0;
  };
  rec(rec, 0, max_arcs);
}

int enumerated_min_cut(const Digraph& g, VertexId s, VertexId t) {
  const int n = g.num_vertices();
  int best = g.num_arcs() + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> t & 1u) || (mask >> s & 1u)) continue;
    int cut = 0;
    for (const Arc& a : g.arcs()) {
      if ((mask >> a.head & 1u) && !(mask >> a.tail & 1u)) ++cut;
    }
    best = std::min(best, cut);
  }
  return best;
}

Digraph with_arcs(const Digraph& g, const std::vector<Arc>& extra) {
  Digraph h(g.num_vertices());
  for (const Arc& a : g.arcs()) h.add_arc(a.tail, a.head);
  for (const Arc& a : extra) h.add_arc(a.tail, a.head);
  return h;
}

// --- criteria -------------------------------------------------------

bool criterion1(std::string& detail) {
  long long instances = 0;
  bool ok = true;
  for (int n = 1; n <= 4 && ok; ++n) {
    for_each_small_digraph(n, 5, [&](const Digraph& g) {
      if (!ok) return;
      for (int k = 1; k <= 3 && ok; ++k) {
        for (int rooted = 0; rooted <= 1 && ok; ++rooted) {
          std::vector<int> reserve(n, 0);
          IndegreeReserve ir = IndegreeReserve::none();
          if (rooted) {
            reserve[0] = k;
            ir = IndegreeReserve::root(0);
          }
          long long solved = solve_kforest(g, k, ir).size();
          long long brute = brute_kforest_value(g, k, reserve);
          long long matroid = matroid_intersection_solve(g, k, reserve);
          ++instances;
          if (solved != brute || solved != matroid) {
            ok = false;
            std::ostringstream why;
            why << "mismatch solved=" << solved << " brute=" << brute
                << " matroid=" << matroid << " (n=" << n
                << " m=" << g.num_arcs() << " k=" << k << " rooted=" << rooted
                << ")";
            detail = why.str();
          }
        }
      }
    });
  }
  if (ok) {
    detail = "3-way equality on " + std::to_string(instances) + " instances";
  }
  return ok;
}

bool criterion2(std::string& detail) {
  std::mt19937_64 rng(20260808);
  long long checked = 0;
  for (int round = 0; round < 500; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);   // up to 8
    int m = static_cast<int>(rng() % 21);      // up to 20
    int k = 1 + static_cast<int>(rng() % 4);   // up to 4
    Digraph g = random_digraph(n, m, rng);
    bool rooted = (rng() % 2) == 0;
    std::vector<int> reserve(n, 0);
    IndegreeReserve ir = IndegreeReserve::none();
    if (rooted) {
      reserve[0] = k;
      ir = IndegreeReserve::root(0);
    }
    ForestLabeling f = solve_kforest(g, k, ir);
    Certificate cert = optimal_subpartition(f);
    MinMaxReport report = verify_minmax(f, cert);
    long long best = brute_subpartition_max(g, k, reserve, false);
    ++checked;
    if (!report.optimal || report.certificate_total != best) {
      std::ostringstream why;
      why << "round " << round << ": deficit=" << report.deficit_total
          << " certificate=" << report.certificate_total
          << " enumerated=" << best;
      detail = why.str();
      return false;
    }
  }
  detail = "equality on " + std::to_string(checked) + " random instances";
  return true;
}

bool criterion3(std::string& detail) {
  std::mt19937_64 rng(3);
  SolveOptions opts;
  opts.check_component_deficits = true;
  long long checks = 0;
  for (int round = 0; round < 200; ++round) {
    int n = 3 + static_cast<int>(rng() % 8);
    int m = static_cast<int>(rng() % (3 * n));
    int k = 1 + static_cast<int>(rng() % 4);
    Digraph g = (m >= n && rng() % 2 == 0) ? random_backbone_digraph(n, m, rng)
                                           : random_digraph(n, m, rng);
    SolveStats stats;
    solve_kforest(g, k, IndegreeReserve::none(), opts, &stats);
    checks += stats.deficit_checks;
    if (stats.deficit_violations != 0) {
      detail = "violation in round " + std::to_string(round);
      return false;
    }
  }
  detail = "0 violations across " + std::to_string(checks) +
           " per-augmentation component checks";
  return true;
}

bool criterion4(std::string& detail) {
  long long instances = 0, brute_checked = 0;
  bool ok = true;
  AugmentOptions opts;
  opts.verify_final = true;
  opts.split.validate_with_full_check = true;
  for (int n = 1; n <= 4 && ok; ++n) {
    for_each_small_digraph(n, 5, [&](const Digraph& g) {
      if (!ok) return;
      for (int k = 1; k <= 3 && ok; ++k) {
        DirectedAugmentResult result = augment_directed(g, k, opts);
        ++instances;
        if (!result.verified && g.num_vertices() > 1) {
          ok = false;
          detail = "connectivity re-check failed";
          return;
        }
        AlphaValues alpha = alpha_values(g, k);
        long long bound = std::max(alpha.alpha_in, alpha.alpha_out);
        if (!alpha.exact || result.gamma != bound) {
          ok = false;
          std::ostringstream why;
          why << "gamma=" << result.gamma << " subpartition bound=" << bound
              << " (n=" << n << " m=" << g.num_arcs() << " k=" << k << ")";
          detail = why.str();
          return;
        }
        if (auto brute = brute_min_augmentation_directed(g, k, 6)) {
          ++brute_checked;
          if (*brute != result.gamma) {
            ok = false;
            std::ostringstream why;
            why << "gamma=" << result.gamma << " brute=" << *brute;
            detail = why.str();
            return;
          }
        }
        if (strong_connectivity(with_arcs(g, result.edges), k) < k) {
          ok = false;
          detail = "augmented graph is not strongly k-connected";
        }
      }
    });
  }
  if (ok) {
    std::ostringstream why;
    why << "3-way equality on " << instances << " instances ("
        << brute_checked << " within the brute-force cap)";
    detail = why.str();
  }
  return ok;
}

bool criterion5(std::string& detail) {
  Digraph c3(3);
  c3.add_arc(0, 1);
  c3.add_arc(1, 2);
  c3.add_arc(2, 0);
  HalfExtension eta = minimal_half_extension(c3, 2);
  AugmentOptions opts;
  opts.verify_final = true;
  DirectedAugmentResult dir = augment_directed(c3, 2, opts);

  UGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  UndirectedAugmentOptions uopts;
  uopts.verify_final = true;
  UndirectedAugmentResult undir = augment_undirected(p3, 2, uopts);

  bool ok = eta.eta == std::vector<int>{1, 1, 1} && dir.gamma == 3 &&
            undir.gamma == 1 && cai_sun_value(p3, 2) == 1;
  detail = "triangle: gamma=" + std::to_string(dir.gamma) + ", eta=(" +
           std::to_string(eta.eta[0]) + "," + std::to_string(eta.eta[1]) + "," +
           std::to_string(eta.eta[2]) + "); path: gamma=" +
           std::to_string(undir.gamma);
  return ok;
}

bool criterion6(std::string& detail) {
  std::mt19937_64 rng(6);
  UndirectedAugmentOptions opts;
  opts.verify_final = true;
  for (int round = 0; round < 200; ++round) {
    int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    int max_extra = 9 - (n - 1);
    int m = n - 1 + static_cast<int>(rng() % (max_extra + 1));
    UGraph g = random_connected_ugraph(n, m, rng);
    int k = 2 + static_cast<int>(rng() % 2);
    UndirectedAugmentResult result = augment_undirected(g, k, opts);
    long long expect = cai_sun_value(g, k);
    if (result.gamma != expect || !result.verified) {
      std::ostringstream why;
      why << "round " << round << ": gamma=" << result.gamma
          << " formula=" << expect;
      detail = why.str();
      return false;
    }
  }
  detail = "subpartition-formula equality on 200 random connected graphs";
  return true;
}

bool criterion7(std::string& detail) {
  std::mt19937_64 rng(7);
  long long splits = 0;
  AugmentOptions dopts;
  dopts.split.validate_with_full_check = true;  // throws on any unsafe split
  UndirectedAugmentOptions uopts;
  uopts.split.validate_with_full_check = true;
  for (int round = 0; round < 120; ++round) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = static_cast<int>(rng() % 10);
    int k = 1 + static_cast<int>(rng() % 3);
    Digraph g = random_digraph(n, m, rng);
    DirectedAugmentResult result = augment_directed(g, k, dopts);
    // The split loop drained the whole star, so the special node ends
    // isolated; every commit passed the full pairwise re-check.
    splits += result.gamma;

    UGraph ug = random_ugraph(n, std::max(0, m - 2), rng);
    UndirectedAugmentResult uresult =
        augment_undirected(ug, std::max(2, k), uopts);
    splits += uresult.gamma;
  }
  detail = std::to_string(splits) +
           " committed splits, each re-validated with the full pairwise check";
  return true;
}

bool criterion8(std::string& detail) {
  const int n = 1000, m = 5000, k = 5;
  std::mt19937_64 rng(42);
  Digraph g = random_backbone_digraph(n, m, rng);

  SolveStats stats;
  auto t0 = std::chrono::steady_clock::now();
  solve_kforest(g, k, IndegreeReserve::none(), {}, &stats);
  long long final_rounds = stats.rounds_per_level.back();
  double bound = 4.0 * k * std::log2(double(k) * n);

  AugmentOptions opts;
  opts.verify_final = true;
  DirectedAugmentResult result = augment_directed(g, k, opts);
  auto t1 = std::chrono::steady_clock::now();
  double seconds = std::chrono::duration<double>(t1 - t0).count();

  std::ostringstream why;
  why << "rounds=" << final_rounds << " (bound " << bound << ")"
      << ", gamma=" << result.gamma << ", end-to-end " << seconds << " s";
  detail = why.str();
  return final_rounds <= bound && seconds < 60.0 && result.verified;
}

bool criterion9(std::string& detail) {
  long long checked = 0;
  // Exhaustive over tiny digraphs, every ordered vertex pair.
  bool ok = true;
  for (int n = 2; n <= 3 && ok; ++n) {
    for_each_small_digraph(n, 4, [&](const Digraph& g) {
      if (!ok) return;
      for (VertexId s = 0; s < n && ok; ++s) {
        for (VertexId t = 0; t < n && ok; ++t) {
          if (s == t) continue;
          int flow = max_flow_value(g, s, t, g.num_arcs() + 1);
          ++checked;
          if (flow != enumerated_min_cut(g, s, t)) {
            ok = false;
            detail = "mismatch on an exhaustive instance";
          }
        }
      }
    });
  }
  // Randomized coverage of the full n <= 6 range.
  std::mt19937_64 rng(9);
  for (int round = 0; round < 2000 && ok; ++round) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = static_cast<int>(rng() % 16);
    Digraph g = random_digraph(n, m, rng);
    VertexId s = static_cast<VertexId>(rng() % n);
    VertexId t = static_cast<VertexId>(rng() % n);
    if (s == t) continue;
    int flow = max_flow_value(g, s, t, g.num_arcs() + 1);
    ++checked;
    if (flow != enumerated_min_cut(g, s, t)) {
      ok = false;
      detail = "mismatch on a random instance (round " +
               std::to_string(round) + ")";
    }
  }
  if (ok) {
    detail = "flow = enumerated min cut on " + std::to_string(checked) +
             " instances";
  }
  return ok;
}

struct Criterion {
  int id;
  const char* name;
  bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "k-forest oracle equivalence (exhaustive n<=4, m<=5, k<=3)", criterion1},
    {2, "min-max certificate equality (500 random instances)", criterion2},
    {3, "component-deficit invariant while growing each forest", criterion3},
    {4, "directed augmentation optimality (exhaustive n<=4, m<=5)", criterion4},
    {5, "named instances: triangle and path", criterion5},
    {6, "undirected augmentation optimality (200 random graphs)", criterion6},
    {7, "splitting safety and termination", criterion7},
    {8, "scaling sanity (n=1000, m=5000, k=5)", criterion8},
    {9, "max-flow equals enumerated min cut", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.name << " \xE2\x80\x94 " << detail << "\n";
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
