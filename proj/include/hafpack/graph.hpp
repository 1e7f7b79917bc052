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

#ifndef HAFPACK_GRAPH_HPP_
#define HAFPACK_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hafpack {

struct Edge {
  int u = -1;
  int v = -1;
  std::int64_t w = 1;
};

// Simple undirected weighted graph, nodes 0..n-1. Input weights are positive;
// weight 0 appears only on internally created subdivision edges.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  void validate() const;  // simple, in-range, nonnegative weights
  bool has_edge(int u, int v) const;
  std::int64_t max_weight() const;
  bool uniform_weights() const;  // all weights == 1
  // node -> list of (neighbor, edge index)
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

// Disjoint terminal sets of even cardinality; rank order is A then B.
struct Terminals {
  std::vector<int> A;
  std::vector<int> B;

  int tau() const { return static_cast<int>(A.size() + B.size()) / 2; }
  std::vector<int> all() const;
  void validate(int n) const;
  // rank of a terminal in A ++ B, or -1
  int rank_of(int node) const;
  bool in_A(int node) const;
  bool in_B(int node) const;
};

// Node-disjoint terminal-to-terminal paths, each stored as a node sequence.
struct PathPacking {
  std::vector<std::vector<int>> paths;

  int edge_count() const;
};

std::int64_t packing_weight(const Graph& g, const PathPacking& p);
// Number of even-length B-paths (length = edge count of the path).
int packing_theta(const Terminals& t, const PathPacking& p);
// Each path oriented from its smaller endpoint, paths sorted.
PathPacking canonical_packing(PathPacking p);

// Terminal-terminal edges replaced by two-edge paths through fresh nodes;
// the original edge of weight w becomes halves of weight (w, 0).
struct SubdividedGraph {
  Graph graph;
  // for each node of graph: -1 for originals, else index of the split edge
  std::vector<int> node_origin_edge;
  int original_n = 0;

  bool is_subdivision_node(int v) const { return v >= original_n; }
};

SubdividedGraph subdivide_terminal_edges(const Graph& g, const Terminals& t);
// Map a packing of the subdivided graph back to the original graph.
PathPacking project_packing(const SubdividedGraph& s, const PathPacking& p);
// Map a packing of the original graph onto the subdivided graph.
PathPacking embed_packing(const SubdividedGraph& s, const Graph& original,
                          const PathPacking& p);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_in, const std::string& msg)
      : std::runtime_error(msg), line(line_in) {}
};

// Text format: first line "n m", then m lines "u v w" with 1-based nodes and
// positive integer weights.
Graph parse_graph(std::istream& in);
std::string format_graph(const Graph& g);

}  // namespace hafpack

#endif  // HAFPACK_GRAPH_HPP_
