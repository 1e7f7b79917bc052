// Copyright 2026 The hafpack Authors
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

#include "hafpack/graph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace hafpack {

void Graph::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("Graph: loop edge");
    if (e.w < 0) throw std::invalid_argument("Graph: negative weight");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("Graph: parallel edges");
  }
}

bool Graph::has_edge(int u, int v) const {
  for (const Edge& e : edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  return false;
}

std::int64_t Graph::max_weight() const {
  std::int64_t m = 0;
  for (const Edge& e : edges) m = std::max(m, e.w);
  return m;
}

bool Graph::uniform_weights() const {
  for (const Edge& e : edges)
    if (e.w != 1) return false;
  return true;
}

std::vector<std::vector<std::pair<int, int>>> Graph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
  }
  return adj;
}

std::vector<int> Terminals::all() const {
  std::vector<int> t = A;
  t.insert(t.end(), B.begin(), B.end());
  return t;
}

void Terminals::validate(int n) const {
  if (A.size() % 2 != 0 || B.size() % 2 != 0)
    throw std::invalid_argument("Terminals: |A| and |B| must be even");
  std::set<int> seen;
  for (int v : all()) {
    if (v < 0 || v >= n) throw std::invalid_argument("Terminals: node out of range");
    if (!seen.insert(v).second)
      throw std::invalid_argument("Terminals: repeated terminal (A and B must be disjoint)");
  }
}

int Terminals::rank_of(int node) const {
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i] == node) return static_cast<int>(i);
  for (std::size_t i = 0; i < B.size(); ++i)
    if (B[i] == node) return static_cast<int>(A.size() + i);
  return -1;
}

bool Terminals::in_A(int node) const {
  return std::find(A.begin(), A.end(), node) != A.end();
}

bool Terminals::in_B(int node) const {
  return std::find(B.begin(), B.end(), node) != B.end();
}

int PathPacking::edge_count() const {
  int c = 0;
  for (const auto& p : paths) c += static_cast<int>(p.size()) - 1;
  return c;
}

std::int64_t packing_weight(const Graph& g, const PathPacking& p) {
  std::int64_t total = 0;
  for (const auto& path : p.paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      bool found = false;
      for (const Edge& e : g.edges) {
        if ((e.u == path[i] && e.v == path[i + 1]) ||
            (e.v == path[i] && e.u == path[i + 1])) {
          total += e.w;
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("packing_weight: path uses a missing edge");
    }
  }
  return total;
}

int packing_theta(const Terminals& t, const PathPacking& p) {
  int theta = 0;
  for (const auto& path : p.paths) {
    const int len = static_cast<int>(path.size()) - 1;
    if (len % 2 == 0 && t.in_B(path.front()) && t.in_B(path.back())) ++theta;
  }
  return theta;
}

PathPacking canonical_packing(PathPacking p) {
  for (auto& path : p.paths)
    if (!path.empty() && path.front() > path.back())
      std::reverse(path.begin(), path.end());
  std::sort(p.paths.begin(), p.paths.end());
  return p;
}

SubdividedGraph subdivide_terminal_edges(const Graph& g, const Terminals& t) {
  SubdividedGraph out;
  out.original_n = g.n;
  out.graph.n = g.n;
  out.node_origin_edge.assign(g.n, -1);
  std::vector<bool> is_term(g.n, false);
  for (int v : t.all()) is_term[v] = true;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const Edge& e = g.edges[i];
    if (is_term[e.u] && is_term[e.v]) {
      const int z = out.graph.n++;
      out.node_origin_edge.push_back(i);
      out.graph.edges.push_back({e.u, z, e.w});
      out.graph.edges.push_back({z, e.v, 0});
    } else {
      out.graph.edges.push_back(e);
    }
  }
  return out;
}

PathPacking project_packing(const SubdividedGraph& s, const PathPacking& p) {
  PathPacking out;
  for (const auto& path : p.paths) {
    std::vector<int> orig;
    for (int v : path)
      if (!s.is_subdivision_node(v)) orig.push_back(v);
    out.paths.push_back(std::move(orig));
  }
  return out;
}

PathPacking embed_packing(const SubdividedGraph& s, const Graph& original,
                          const PathPacking& p) {
  // Locate the subdivision node of each split original edge.
  std::vector<int> split_node(original.edges.size(), -1);
  for (int v = s.original_n; v < s.graph.n; ++v)
    split_node[s.node_origin_edge[v]] = v;

  PathPacking out;
  for (const auto& path : p.paths) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < path.size(); ++i) {
      sub.push_back(path[i]);
      if (i + 1 == path.size()) break;
      for (int e = 0; e < static_cast<int>(original.edges.size()); ++e) {
        const Edge& ed = original.edges[e];
        if ((ed.u == path[i] && ed.v == path[i + 1]) ||
            (ed.v == path[i] && ed.u == path[i + 1])) {
          if (split_node[e] >= 0) sub.push_back(split_node[e]);
          break;
        }
      }
    }
    out.paths.push_back(std::move(sub));
  }
  return out;
}

namespace {

std::vector<long long> parse_int_line(const std::string& line, int lineno,
                                      std::size_t expect) {
  std::istringstream iss(line);
  std::vector<long long> vals;
  long long v;
  while (iss >> v) vals.push_back(v);
  std::string rest;
  if (iss.clear(), iss >> rest)
    throw ParseError(lineno, "unexpected token '" + rest + "'");
  if (vals.size() != expect)
    throw ParseError(lineno, "expected " + std::to_string(expect) + " integers");
  return vals;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;  // skip blank lines
      if (line[i] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(1, "missing header line 'n m'");
  auto hdr = parse_int_line(line, lineno, 2);
  Graph g;
  g.n = static_cast<int>(hdr[0]);
  const long long m = hdr[1];
  if (g.n < 0 || m < 0) throw ParseError(lineno, "negative n or m");
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError(lineno + 1, "missing edge line");
    auto ev = parse_int_line(line, lineno, 3);
    if (ev[0] < 1 || ev[0] > g.n || ev[1] < 1 || ev[1] > g.n)
      throw ParseError(lineno, "edge endpoint out of range (nodes are 1-based)");
    if (ev[2] < 1) throw ParseError(lineno, "edge weight must be a positive integer");
    g.edges.push_back({static_cast<int>(ev[0]) - 1, static_cast<int>(ev[1]) - 1, ev[2]});
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges)
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
  return out.str();
}

}  // namespace hafpack
