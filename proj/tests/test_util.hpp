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

#ifndef HAFPACK_TESTS_TEST_UTIL_HPP_
#define HAFPACK_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "hafpack/graph.hpp"
#include "hafpack/matrix.hpp"
#include "hafpack/rng.hpp"

namespace hafpack::testutil {

// Random matrix in S(n, max_deg) under the given modulus; roughly zero_pct
// percent of the entries are zero.
inline SymPolyMatrix random_matrix(Rng& rng, int size, Modulus m, int max_deg,
                                   int zero_pct = 25) {
  SymPolyMatrix a(size, m);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      if (static_cast<int>(rng.below(100)) < zero_pct) continue;
      std::vector<std::int64_t> coeffs(std::min(max_deg, m.d) + 1);
      for (auto& c : coeffs) c = static_cast<std::int64_t>(rng.below(m.mask() + 1ull));
      a.set(i, j, TruncatedPoly(m, coeffs));
    }
  return a;
}

// Simple connected random graph on n nodes with target edge count.
inline Graph random_connected_graph(Rng& rng, int n, int edges) {
  Graph g;
  g.n = n;
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  // random spanning tree first
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);
  std::vector<std::pair<int, int>> chosen;
  for (int i = 1; i < n; ++i) {
    const int u = order[i];
    const int v = order[rng.below(i)];
    chosen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(chosen.begin(), chosen.end());
  while (static_cast<int>(chosen.size()) < edges &&
         chosen.size() < all.size()) {
    const auto cand = all[rng.below(all.size())];
    if (!std::binary_search(chosen.begin(), chosen.end(), cand)) {
      chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), cand), cand);
    }
  }
  for (auto [u, v] : chosen) g.edges.push_back({u, v, 1});
  return g;
}

inline void randomize_edge_weights(Rng& rng, Graph& g, std::int64_t lo, std::int64_t hi) {
  for (auto& e : g.edges) e.w = rng.range(lo, hi);
}

// Distinct random terminals, |A| = a_size, |B| = b_size. With forbid_tt true,
// returns nullopt if the graph has an edge joining two of the chosen nodes.
inline std::optional<Terminals> random_terminals(Rng& rng, const Graph& g,
                                                 int a_size, int b_size,
                                                 bool forbid_tt) {
  const int need = a_size + b_size;
  if (need > g.n) return std::nullopt;
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  for (int i = g.n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);
  Terminals t;
  t.A.assign(order.begin(), order.begin() + a_size);
  t.B.assign(order.begin() + a_size, order.begin() + need);
  if (forbid_tt) {
    std::vector<bool> is_term(g.n, false);
    for (int v : t.all()) is_term[v] = true;
    for (const Edge& e : g.edges)
      if (is_term[e.u] && is_term[e.v]) return std::nullopt;
  }
  return t;
}

}  // namespace hafpack::testutil

#endif  // HAFPACK_TESTS_TEST_UTIL_HPP_
