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

#ifndef HAFPACK_GALLAI_HPP_
#define HAFPACK_GALLAI_HPP_

#include <span>
#include <vector>

#include "hafpack/graph.hpp"
#include "hafpack/intpoly.hpp"
#include "hafpack/matrix.hpp"

namespace hafpack {

// The auxiliary graph H whose perfect matchings encode terminal path
// packings: original nodes, a copy v' of every non-terminal v, zero-weight
// linking edges vv', and copies of the non-terminal-incident edges.
struct GallaiGraph {
  enum class EdgeClass { Original, Copy, Link };  // E, E', E_=

  struct HEdge {
    int u = -1;
    int v = -1;
    std::int64_t w = 0;
    EdgeClass cls = EdgeClass::Original;
    int terminal = -1;   // t when the edge lies in E_t or E'_t
    int orig_edge = -1;  // source edge in the input graph (-1 for E_=)
  };

  int n_orig = 0;
  int h = 0;                  // |V_H|; originals first, then copies
  std::vector<int> copy_of;   // H node -> original node
  std::vector<int> copy_idx;  // original node -> its copy, -1 for terminals
  std::vector<HEdge> edges;

  bool in_Et(const HEdge& e) const {
    return e.cls == EdgeClass::Original && e.terminal >= 0;
  }
  bool in_Ept(const HEdge& e) const {
    return e.cls == EdgeClass::Copy && e.terminal >= 0;
  }
  // node -> (neighbor, H-edge index)
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

// Requires no edge of g joining two terminals (subdivide first).
GallaiGraph build_gallai(const Graph& g, const Terminals& t);

// S[p,q]: entry x^w scaled by p_t on E_t edges and q_t on E'_t edges, where
// p and q are indexed by terminal rank (A in order, then B). delete_edge
// suppresses every H-edge derived from that input edge.
SymPolyMatrix build_S_pq(const GallaiGraph& h, const Terminals& t,
                         std::span<const std::int64_t> p,
                         std::span<const std::int64_t> q, Modulus m,
                         int delete_edge = -1);
SymPolyMatrix build_S(const GallaiGraph& h, Modulus m);
// S' = S with entries negated on E'_t for t in B.
SymPolyMatrix build_S_signed(const GallaiGraph& h, const Terminals& t, Modulus m);

// Exact-integer counterparts for the brute-force oracles.
IntPolyMatrix build_S_pq_int(const GallaiGraph& h, const Terminals& t,
                             std::span<const std::int64_t> p,
                             std::span<const std::int64_t> q);
IntPolyMatrix build_S_int(const GallaiGraph& h);
IntPolyMatrix build_S_signed_int(const GallaiGraph& h, const Terminals& t);

// A perfect matching of H as a partner array of size h.
using Matching = std::vector<int>;

// Walk the alternating matching/link structure from every terminal and
// project copies back to original nodes.
PathPacking matching_to_packing(const GallaiGraph& h, const Terminals& t,
                                const Matching& m);

}  // namespace hafpack

#endif  // HAFPACK_GALLAI_HPP_
