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

#include "forestaug/io.hpp"

#include <charconv>
#include <sstream>

namespace forestaug {

namespace {

struct LineScanner {
  std::string_view text;
  size_t pos = 0;
  int line_no = 0;

  // Next non-comment, non-blank line's tokens; empty result at EOF.
  std::vector<std::string_view> next_tokens() {
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      std::vector<std::string_view> tokens;
      size_t at = 0;
      while (at < line.size()) {
        while (at < line.size() && (line[at] == ' ' || line[at] == '\t' ||
                                    line[at] == '\r')) {
          ++at;
        }
        size_t start = at;
        while (at < line.size() && line[at] != ' ' && line[at] != '\t' &&
               line[at] != '\r') {
          ++at;
        }
        if (at > start) tokens.push_back(line.substr(start, at - start));
      }
      if (tokens.empty()) continue;
      if (tokens.front().front() == '#') continue;
      return tokens;
    }
    return {};
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("line " + std::to_string(line_no) + ": " + why);
  }
};

long long parse_int(const LineScanner& sc, std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    sc.fail("expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  LineScanner sc{text};
  auto header = sc.next_tokens();
  if (header.empty()) throw InputError("empty graph file");
  if (header.size() != 3) {
    sc.fail("header must be 'n m directed|undirected'");
  }
  long long n = parse_int(sc, header[0]);
  long long m = parse_int(sc, header[1]);
  bool directed;
  if (header[2] == "directed") {
    directed = true;
  } else if (header[2] == "undirected") {
    directed = false;
  } else {
    sc.fail("orientation must be 'directed' or 'undirected'");
  }
  if (n < 0 || n > 50'000'000) sc.fail("vertex count out of range");
  if (m < 0) sc.fail("edge count out of range");

  auto read_endpoints = [&]() -> std::pair<VertexId, VertexId> {
    auto tokens = sc.next_tokens();
    if (tokens.empty()) sc.fail("unexpected end of file: missing edge lines");
    if (tokens.size() != 2) sc.fail("edge lines must be 'u v'");
    long long u = parse_int(sc, tokens[0]);
    long long v = parse_int(sc, tokens[1]);
    if (u < 1 || u > n || v < 1 || v > n) {
      sc.fail("vertex id out of range [1, " + std::to_string(n) + "]");
    }
    if (u == v) sc.fail("self-loops are not allowed");
    return {static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)};
  };

  if (directed) {
    Digraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
      auto [u, v] = read_endpoints();
      g.add_arc(u, v);
    }
    if (!sc.next_tokens().empty()) sc.fail("trailing data after edge list");
    return g;
  }
  UGraph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    auto [u, v] = read_endpoints();
    g.add_edge(u, v);
  }
  if (!sc.next_tokens().empty()) sc.fail("trailing data after edge list");
  return g;
}

std::string serialize_graph(const Digraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_arcs() << " directed\n";
  for (const Arc& a : g.arcs()) {
    out << a.tail + 1 << ' ' << a.head + 1 << '\n';
  }
  return out.str();
}

std::string serialize_graph(const UGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << " undirected\n";
  for (const auto& [u, v] : g.edges()) {
    out << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

std::string serialize_labels(const ForestLabeling& f) {
  std::ostringstream out;
  for (EdgeId e = 0; e < f.graph().num_arcs(); ++e) {
    out << e + 1 << ' ' << f.label(e) << '\n';
  }
  return out.str();
}

std::vector<int> parse_labels(std::string_view text, int num_edges) {
  LineScanner sc{text};
  std::vector<int> labels(num_edges, -1);
  int assigned = 0;
  while (true) {
    auto tokens = sc.next_tokens();
    if (tokens.empty()) break;
    if (tokens.size() != 2) sc.fail("label lines must be 'edgeId label'");
    long long id = parse_int(sc, tokens[0]);
    long long label = parse_int(sc, tokens[1]);
    if (id < 1 || id > num_edges) {
      sc.fail("edge id out of range [1, " + std::to_string(num_edges) + "]");
    }
    if (labels[id - 1] >= 0) sc.fail("duplicate label for edge " +
                                     std::to_string(id));
    if (label < 0) sc.fail("labels are non-negative");
    labels[id - 1] = static_cast<int>(label);
    ++assigned;
  }
  if (assigned != num_edges) {
    throw InputError("labeling covers " + std::to_string(assigned) + " of " +
                     std::to_string(num_edges) + " edges");
  }
  return labels;
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "certificate " << cert.sets.size() << ' ' << cert.total << '\n';
  for (size_t i = 0; i < cert.sets.size(); ++i) {
    out << cert.set_values[i] << ' ' << cert.sets[i].size();
    for (VertexId v : cert.sets[i]) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  LineScanner sc{text};
  auto header = sc.next_tokens();
  if (header.size() != 3 || header[0] != "certificate") {
    throw InputError("certificate header must be 'certificate numSets total'");
  }
  long long num_sets = parse_int(sc, header[1]);
  long long total = parse_int(sc, header[2]);
  if (num_sets < 0) sc.fail("negative set count");
  Certificate cert;
  cert.total = total;
  long long computed_total = 0;
  for (long long i = 0; i < num_sets; ++i) {
    auto tokens = sc.next_tokens();
    if (tokens.size() < 2) sc.fail("set lines must be 'value size v...'");
    long long value = parse_int(sc, tokens[0]);
    long long size = parse_int(sc, tokens[1]);
    if (size < 1 || static_cast<long long>(tokens.size()) != 2 + size) {
      sc.fail("set line lists " + std::to_string(tokens.size() - 2) +
              " vertices but declares " + std::to_string(size));
    }
    std::vector<VertexId> vs;
    for (long long j = 0; j < size; ++j) {
      long long v = parse_int(sc, tokens[2 + j]);
      if (v < 1) sc.fail("vertex ids are 1-based");
      vs.push_back(static_cast<VertexId>(v - 1));
    }
    cert.sets.push_back(std::move(vs));
    cert.set_values.push_back(value);
    computed_total += value;
  }
  if (!sc.next_tokens().empty()) {
    throw InputError("trailing data after certificate sets");
  }
  if (computed_total != total) {
    throw InputError("certificate total does not match its set values");
  }
  return cert;
}

std::string serialize_arcs(const std::vector<Arc>& arcs, int n) {
  std::ostringstream out;
  out << n << ' ' << arcs.size() << " directed\n";
  for (const Arc& a : arcs) out << a.tail + 1 << ' ' << a.head + 1 << '\n';
  return out.str();
}

std::string serialize_edges(
    const std::vector<std::pair<VertexId, VertexId>>& edges, int n) {
  std::ostringstream out;
  out << n << ' ' << edges.size() << " undirected\n";
  for (const auto& [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace forestaug
