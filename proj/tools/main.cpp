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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "forestaug/certificate.hpp"
#include "forestaug/directed_augment.hpp"
#include "forestaug/io.hpp"
#include "forestaug/kforest.hpp"
#include "forestaug/mincut.hpp"
#include "forestaug/oracle.hpp"
#include "forestaug/random_graph.hpp"
#include "forestaug/undirected_augment.hpp"

using json = nlohmann::json;
using namespace forestaug;

namespace {

// Exit codes: 0 success+verified, 1 success with verification skipped,
// 2 input error, 3 invariant violation or failed verification.
enum ExitCode { kOk = 0, kUnverified = 1, kBadInput = 2, kViolation = 3 };

enum class VerifyLevel { None, Certificate, Full };

const char* level_name(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::None:
      return "none";
    case VerifyLevel::Certificate:
      return "certificate";
    case VerifyLevel::Full:
      return "full";
  }
  return "none";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::optional<std::string>& path,
                  const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + *path + "' for writing");
  out << text;
}

Digraph require_directed(const AnyGraph& g, const std::string& path) {
  if (!std::holds_alternative<Digraph>(g)) {
    throw InputError("'" + path + "' is undirected; this command needs a directed graph");
  }
  return std::get<Digraph>(g);
}

UGraph require_undirected(const AnyGraph& g, const std::string& path) {
  if (!std::holds_alternative<UGraph>(g)) {
    throw InputError("'" + path + "' is directed; this command needs an undirected graph");
  }
  return std::get<UGraph>(g);
}

json certificate_json(const Certificate& cert) {
  json sets = json::array();
  for (size_t i = 0; i < cert.sets.size(); ++i) {
    json vs = json::array();
    for (VertexId v : cert.sets[i]) vs.push_back(v + 1);
    sets.push_back({{"value", cert.set_values[i]}, {"vertices", vs}});
  }
  return {{"total", cert.total}, {"sets", sets}};
}

struct CommonFlags {
  std::string input;
  int k = 1;
  std::string format = "text";
  VerifyLevel verify = VerifyLevel::Certificate;
  std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_verify = true) {
  cmd->add_option("input", flags.input, "graph file ('-' for stdin)")
      ->required();
  cmd->add_option("--k", flags.k, "connectivity / forest-count target")
      ->required();
  cmd->add_option("--format", flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", flags.out, "write the result here instead of stdout");
  if (with_verify) {
    std::map<std::string, VerifyLevel> levels{
        {"none", VerifyLevel::None},
        {"certificate", VerifyLevel::Certificate},
        {"full", VerifyLevel::Full}};
    cmd->add_option("--verify", flags.verify, "verification level")
        ->transform(CLI::CheckedTransformer(levels, CLI::ignore_case));
  }
}

int run_kforest(const CommonFlags& flags, std::optional<int> root_1based) {
  Digraph g = require_directed(parse_graph(read_input(flags.input)), flags.input);
  IndegreeReserve reserve = IndegreeReserve::none();
  if (root_1based) {
    if (*root_1based < 1 || *root_1based > g.num_vertices()) {
      throw InputError("--root out of range [1, n]");
    }
    reserve = IndegreeReserve::root(*root_1based - 1);
  }

  SolveOptions opts;
  opts.validate_each_step = false;
  ForestLabeling f = solve_kforest(g, flags.k, reserve, opts);
  if (flags.verify == VerifyLevel::Full) f.validate();

  std::optional<Certificate> cert;
  bool optimal = false;
  if (flags.verify != VerifyLevel::None) {
    cert = optimal_subpartition(f);
    optimal = verify_minmax(f, *cert).optimal;
    if (!optimal) {
      std::cerr << "certificate failed to prove optimality\n";
      return kViolation;
    }
  }

  if (flags.format == "json") {
    json out = {{"command", "kforest"},
                {"n", g.num_vertices()},
                {"m", g.num_arcs()},
                {"k", flags.k},
                {"size", f.size()},
                {"deficit", f.total_deficit()},
                {"labels", f.labels()},
                {"verify_level", level_name(flags.verify)},
                {"verified", optimal}};
    if (root_1based) out["root"] = *root_1based;
    if (cert) out["certificate"] = certificate_json(*cert);
    write_output(flags.out, out.dump(2) + "\n");
  } else {
    std::ostringstream summary;
    summary << "# kforest k=" << flags.k << " size=" << f.size()
            << " deficit=" << f.total_deficit();
    if (cert) summary << " certificate=" << cert->total;
    summary << (optimal ? " verified" : " unverified") << "\n";
    if (flags.out) {
      write_output(flags.out, serialize_labels(f));
      if (cert) write_output(*flags.out + ".cert", serialize_certificate(*cert));
      std::cout << summary.str();
    } else {
      std::cout << summary.str() << serialize_labels(f);
      if (cert) std::cout << "\n" << serialize_certificate(*cert);
    }
  }
  return flags.verify == VerifyLevel::None ? kUnverified : kOk;
}

int run_augment(const CommonFlags& flags) {
  Digraph g = require_directed(parse_graph(read_input(flags.input)), flags.input);
  AugmentOptions opts;
  opts.verify_final = flags.verify == VerifyLevel::Full;
  DirectedAugmentResult result = augment_directed(g, flags.k, opts);

  std::optional<AlphaValues> alpha;
  if (flags.verify != VerifyLevel::None && g.num_vertices() <= 12) {
    alpha = alpha_values(g, flags.k);
    if (alpha->exact &&
        result.gamma != std::max(alpha->alpha_in, alpha->alpha_out)) {
      std::cerr << "added-edge count disagrees with the subpartition bound\n";
      return kViolation;
    }
  }

  if (flags.format == "json") {
    json edges = json::array();
    for (const Arc& a : result.edges) {
      edges.push_back({a.tail + 1, a.head + 1});
    }
    json out = {{"command", "augment"},
                {"n", g.num_vertices()},
                {"m", g.num_arcs()},
                {"k", flags.k},
                {"gamma", result.gamma},
                {"eta_in", result.eta_in_total},
                {"eta_out", result.eta_out_total},
                {"edges", edges},
                {"fast_path_in", result.fast_path_in},
                {"fast_path_out", result.fast_path_out},
                {"verify_level", level_name(flags.verify)},
                {"connectivity_rechecked", result.verified}};
    if (alpha && alpha->exact) {
      out["alpha_in"] = alpha->alpha_in;
      out["alpha_out"] = alpha->alpha_out;
    }
    write_output(flags.out, out.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << serialize_arcs(result.edges, g.num_vertices());
    text << "# gamma " << result.gamma << "\n";
    text << "# eta_in " << result.eta_in_total << "\n";
    text << "# eta_out " << result.eta_out_total << "\n";
    if (alpha && alpha->exact) {
      text << "# alpha_in " << alpha->alpha_in << "\n";
      text << "# alpha_out " << alpha->alpha_out << "\n";
    }
    text << "# verification "
         << (flags.verify == VerifyLevel::None
                 ? "skipped"
                 : (flags.verify == VerifyLevel::Full ? "full: passed"
                                                      : "certificate: passed"))
         << "\n";
    write_output(flags.out, text.str());
  }
  return flags.verify == VerifyLevel::None ? kUnverified : kOk;
}

int run_augment_undirected(const CommonFlags& flags) {
  UGraph g = require_undirected(parse_graph(read_input(flags.input)), flags.input);
  UndirectedAugmentOptions opts;
  opts.verify_final = flags.verify == VerifyLevel::Full;
  UndirectedAugmentResult result = augment_undirected(g, flags.k, opts);

  bool oracle_checked = false;
  if (flags.verify != VerifyLevel::None && flags.k >= 2 &&
      g.num_vertices() <= 12) {
    oracle_checked = true;
    if (result.gamma != cai_sun_value(g, flags.k)) {
      std::cerr << "added-edge count disagrees with the subpartition bound\n";
      return kViolation;
    }
  }

  if (flags.format == "json") {
    json edges = json::array();
    for (const auto& [u, v] : result.edges) edges.push_back({u + 1, v + 1});
    json out = {{"command", "augment-undirected"},
                {"n", g.num_vertices()},
                {"m", g.num_edges()},
                {"k", flags.k},
                {"gamma", result.gamma},
                {"eta_total", result.eta_total},
                {"parity_bumped", result.parity_bumped},
                {"edges", edges},
                {"oracle_checked", oracle_checked},
                {"verify_level", level_name(flags.verify)},
                {"connectivity_rechecked", result.verified}};
    write_output(flags.out, out.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << serialize_edges(result.edges, g.num_vertices());
    text << "# gamma " << result.gamma << "\n";
    if (flags.k >= 2) text << "# eta_total " << result.eta_total << "\n";
    if (oracle_checked) text << "# subpartition_bound " << result.gamma << "\n";
    text << "# verification "
         << (flags.verify == VerifyLevel::None
                 ? "skipped"
                 : (flags.verify == VerifyLevel::Full ? "full: passed"
                                                      : "certificate: passed"))
         << "\n";
    write_output(flags.out, text.str());
  }
  return flags.verify == VerifyLevel::None ? kUnverified : kOk;
}

int run_connectivity(const std::string& input, std::optional<int> cap,
                     const std::string& format,
                     const std::optional<std::string>& out) {
  AnyGraph any = parse_graph(read_input(input));
  int value;
  bool directed = std::holds_alternative<Digraph>(any);
  int n, m;
  if (directed) {
    const Digraph& g = std::get<Digraph>(any);
    n = g.num_vertices();
    m = g.num_arcs();
    value = strong_connectivity(g, cap.value_or(std::max(1, m)));
  } else {
    const UGraph& g = std::get<UGraph>(any);
    n = g.num_vertices();
    m = g.num_edges();
    value = edge_connectivity(g, cap.value_or(std::max(1, 2 * m)));
  }
  if (format == "json") {
    json j = {{"command", "connectivity"},
              {"directed", directed},
              {"n", n},
              {"m", m},
              {"value", value}};
    if (cap) j["cap"] = *cap;
    write_output(out, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "# " << (directed ? "strong" : "edge") << " connectivity";
    if (cap) text << " (capped at " << *cap << ")";
    text << "\n" << value << "\n";
    write_output(out, text.str());
  }
  return kOk;
}

int run_verify(const std::string& input, int k, std::optional<int> root_1based,
               const std::optional<std::string>& labels_path,
               const std::optional<std::string>& cert_path,
               const std::optional<std::string>& added_path,
               const std::string& format) {
  AnyGraph any = parse_graph(read_input(input));

  if (labels_path) {
    Digraph g = require_directed(any, input);
    IndegreeReserve reserve = IndegreeReserve::none();
    if (root_1based) {
      if (*root_1based < 1 || *root_1based > g.num_vertices()) {
        throw InputError("--root out of range [1, n]");
      }
      reserve = IndegreeReserve::root(*root_1based - 1);
    }
    std::vector<int> labels =
        parse_labels(read_input(*labels_path), g.num_arcs());
    ForestLabeling f = ForestLabeling::from_labels(g, k, reserve, labels);

    Certificate cert;
    if (cert_path) {
      cert = parse_certificate(read_input(*cert_path));
    } else {
      try {
        cert = optimal_subpartition(f);
      } catch (const InputError&) {
        std::cerr << "labeling is not optimal: an augmenting path exists\n";
        return kViolation;
      }
    }
    MinMaxReport report = verify_minmax(f, cert);

    std::string oracle = "skipped";
    if (g.num_arcs() <= 12 && g.num_vertices() <= 8) {
      std::vector<int> reserve_vec(g.num_vertices(), 0);
      if (root_1based) reserve_vec[*root_1based - 1] = k;
      long long brute = brute_kforest_value(g, k, reserve_vec);
      long long matroid = matroid_intersection_solve(g, k, reserve_vec);
      oracle = (brute == f.size() && matroid == f.size()) ? "agreed"
                                                          : "disagreed";
    }
    bool ok = report.optimal && oracle != "disagreed";
    if (format == "json") {
      json j = {{"command", "verify"},          {"kind", "kforest"},
                {"size", f.size()},             {"deficit", report.deficit_total},
                {"certificate", report.certificate_total},
                {"optimal", report.optimal},    {"oracle", oracle}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# verify kforest: size=" << f.size()
                << " deficit=" << report.deficit_total
                << " certificate=" << report.certificate_total
                << " oracle=" << oracle << "\n"
                << (ok ? "verified" : "NOT verified") << "\n";
    }
    return ok ? kOk : kViolation;
  }

  if (added_path) {
    AnyGraph added = parse_graph(read_input(*added_path));
    bool ok;
    long long gamma;
    std::string oracle = "skipped";
    if (std::holds_alternative<Digraph>(any)) {
      Digraph g = std::get<Digraph>(any);
      Digraph extra = require_directed(added, *added_path);
      Digraph merged(g.num_vertices());
      for (const Arc& a : g.arcs()) merged.add_arc(a.tail, a.head);
      for (const Arc& a : extra.arcs()) merged.add_arc(a.tail, a.head);
      gamma = extra.num_arcs();
      ok = strong_connectivity(merged, k) >= k;
      if (g.num_vertices() <= 5) {
        if (auto brute = brute_min_augmentation_directed(g, k, 6)) {
          oracle = (*brute == gamma) ? "agreed" : "disagreed";
        }
      }
    } else {
      UGraph g = std::get<UGraph>(any);
      UGraph extra = require_undirected(added, *added_path);
      UGraph merged(g.num_vertices());
      for (const auto& [u, v] : g.edges()) merged.add_edge(u, v);
      for (const auto& [u, v] : extra.edges()) merged.add_edge(u, v);
      gamma = extra.num_edges();
      ok = edge_connectivity(merged, k) >= k;
      if (g.num_vertices() <= 5) {
        if (auto brute = brute_min_augmentation_undirected(g, k, 6)) {
          oracle = (*brute == gamma) ? "agreed" : "disagreed";
        }
      }
    }
    ok = ok && oracle != "disagreed";
    if (format == "json") {
      json j = {{"command", "verify"},
                {"kind", "augmentation"},
                {"gamma", gamma},
                {"connected", ok},
                {"oracle", oracle}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# verify augmentation: gamma=" << gamma
                << " oracle=" << oracle << "\n"
                << (ok ? "verified" : "NOT verified") << "\n";
    }
    return ok ? kOk : kViolation;
  }

  throw InputError("verify needs --labels or --added");
}

int run_bench(int n, int m, int k, uint64_t seed, int instances, bool stable,
              const std::optional<std::string>& out) {
  std::ostringstream csv;
  csv << "n,m,k,delta,wall_ms,rounds,augmentations\n";
  for (int i = 0; i < instances; ++i) {
    std::mt19937_64 rng(seed + static_cast<uint64_t>(i));
    SolveStats stats;
    double ms = 0.0;
    int delta;
    if (n <= 1) {
      delta = k;
      stats.rounds_per_level.assign(k, 0);
    } else {
      Digraph g = m >= n ? random_backbone_digraph(n, m, rng)
                         : random_digraph(n, m, rng);
      int kg = std::min(strong_connectivity(g, k), k - 1);
      delta = k - kg;
      auto t0 = std::chrono::steady_clock::now();
      solve_kforest(g, k, IndegreeReserve::none(), {}, &stats);
      auto t1 = std::chrono::steady_clock::now();
      ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    long long final_rounds =
        stats.rounds_per_level.empty() ? 0 : stats.rounds_per_level.back();
    csv << n << ',' << m << ',' << k << ',' << delta << ','
        << (stable ? 0.0 : ms) << ',' << final_rounds << ','
        << stats.augmentations << "\n";
  }
  write_output(out, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-indegree k-forests and edge-connectivity augmentation"};
  app.require_subcommand(1);

  CommonFlags kforest_flags;
  std::optional<int> kforest_root;
  CLI::App* kforest_cmd =
      app.add_subcommand("kforest", "pack k bounded-indegree forests");
  add_common(kforest_cmd, kforest_flags);
  kforest_cmd->add_option("--root", kforest_root,
                          "reserve the full indegree budget at this vertex "
                          "(1-based)");

  CommonFlags augment_flags;
  CLI::App* augment_cmd =
      app.add_subcommand("augment", "make a digraph strongly k-connected");
  add_common(augment_cmd, augment_flags);

  CommonFlags undirected_flags;
  CLI::App* undirected_cmd = app.add_subcommand(
      "augment-undirected", "make an undirected graph k-edge-connected");
  add_common(undirected_cmd, undirected_flags);

  std::string conn_input, conn_format = "text";
  std::optional<int> conn_cap;
  std::optional<std::string> conn_out;
  CLI::App* conn_cmd =
      app.add_subcommand("connectivity", "report (capped) edge connectivity");
  conn_cmd->add_option("input", conn_input)->required();
  conn_cmd->add_option("--k", conn_cap, "cap the reported value");
  conn_cmd->add_option("--format", conn_format)
      ->check(CLI::IsMember({"text", "json"}));
  conn_cmd->add_option("--out", conn_out);

  std::string verify_input, verify_format = "text";
  int verify_k = 1;
  std::optional<int> verify_root;
  std::optional<std::string> verify_labels, verify_cert, verify_added;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "re-check solution artifacts");
  verify_cmd->add_option("input", verify_input)->required();
  verify_cmd->add_option("--k", verify_k)->required();
  verify_cmd->add_option("--root", verify_root, "reserve root (1-based)");
  verify_cmd->add_option("--labels", verify_labels, "forest labeling file");
  verify_cmd->add_option("--certificate", verify_cert, "certificate file");
  verify_cmd->add_option("--added", verify_added, "added-edge list file");
  verify_cmd->add_option("--format", verify_format)
      ->check(CLI::IsMember({"text", "json"}));

  int bench_n = 100, bench_m = 400, bench_k = 2, bench_instances = 1;
  uint64_t bench_seed = 1;
  bool bench_stable = false;
  std::optional<std::string> bench_out;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time the solver on random graphs (CSV)");
  bench_cmd->add_option("--n", bench_n);
  bench_cmd->add_option("--m", bench_m);
  bench_cmd->add_option("--k", bench_k);
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--instances", bench_instances);
  bench_cmd->add_flag("--stable", bench_stable,
                      "zero the wall_ms column for byte-comparable output");
  bench_cmd->add_option("--out", bench_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (kforest_cmd->parsed()) return run_kforest(kforest_flags, kforest_root);
    if (augment_cmd->parsed()) return run_augment(augment_flags);
    if (undirected_cmd->parsed()) {
      return run_augment_undirected(undirected_flags);
    }
    if (conn_cmd->parsed()) {
      return run_connectivity(conn_input, conn_cap, conn_format, conn_out);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_input, verify_k, verify_root, verify_labels,
                        verify_cert, verify_added, verify_format);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_n, bench_m, bench_k, bench_seed, bench_instances,
                       bench_stable, bench_out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kViolation;
  }
  return kBadInput;
}
