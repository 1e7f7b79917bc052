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

#include "hafpack/gallai.hpp"

#include <algorithm>
#include <stdexcept>

namespace hafpack {

std::vector<std::vector<std::pair<int, int>>> GallaiGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(h);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
  }
  return adj;
}

GallaiGraph build_gallai(const Graph& g, const Terminals& t) {
  g.validate();
  t.validate(g.n);
  std::vector<bool> is_term(g.n, false);
  for (int v : t.all()) is_term[v] = true;

  GallaiGraph out;
  out.n_orig = g.n;
  out.copy_idx.assign(g.n, -1);
  out.h = g.n;
  for (int v = 0; v < g.n; ++v) out.copy_of.push_back(v);
  for (int v = 0; v < g.n; ++v) {
    if (is_term[v]) continue;
    out.copy_idx[v] = out.h++;
    out.copy_of.push_back(v);
  }

  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const Edge& e = g.edges[i];
    const bool tu = is_term[e.u];
    const bool tv = is_term[e.v];
    if (tu && tv)
      throw std::invalid_argument(
          "build_gallai: edge joins two terminals (subdivide first)");
    if (!tu && !tv) {
      out.edges.push_back({e.u, e.v, e.w, GallaiGraph::EdgeClass::Original, -1, i});
      out.edges.push_back({out.copy_idx[e.u], out.copy_idx[e.v], e.w,
                           GallaiGraph::EdgeClass::Copy, -1, i});
    } else {
      const int term = tu ? e.u : e.v;
      const int other = tu ? e.v : e.u;
      out.edges.push_back({term, other, e.w, GallaiGraph::EdgeClass::Original, term, i});
      out.edges.push_back({term, out.copy_idx[other], e.w,
                           GallaiGraph::EdgeClass::Copy, term, i});
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (!is_term[v])
      out.edges.push_back({v, out.copy_idx[v], 0, GallaiGraph::EdgeClass::Link, -1, -1});
  return out;
}

SymPolyMatrix build_S_pq(const GallaiGraph& h, const Terminals& t,
                         std::span<const std::int64_t> p,
                         std::span<const std::int64_t> q, Modulus m,
                         int delete_edge) {
  const std::size_t two_tau = t.all().size();
  if (p.size() != two_tau || q.size() != two_tau)
    throw std::invalid_argument("build_S_pq: p,q must have one entry per terminal");
  if (h.h % 2 != 0) throw std::logic_error("build_S_pq: |V_H| must be even");
  SymPolyMatrix s(h.h, m);
  for (const auto& e : h.edges) {
    if (e.orig_edge >= 0 && e.orig_edge == delete_edge) continue;
    std::int64_t factor = 1;
    if (h.in_Et(e)) factor = p[t.rank_of(e.terminal)];
    else if (h.in_Ept(e)) factor = q[t.rank_of(e.terminal)];
    s.set(e.u, e.v, TruncatedPoly::monomial(m, static_cast<int>(e.w), factor));
  }
  return s;
}

SymPolyMatrix build_S(const GallaiGraph& h, Modulus m) {
  if (h.h % 2 != 0) throw std::logic_error("build_S: |V_H| must be even");
  SymPolyMatrix s(h.h, m);
  for (const auto& e : h.edges)
    s.set(e.u, e.v, TruncatedPoly::monomial(m, static_cast<int>(e.w), 1));
  return s;
}

namespace {

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> signed_pq(
    const Terminals& t) {
  std::vector<std::int64_t> p(t.all().size(), 1);
  std::vector<std::int64_t> q;
  q.insert(q.end(), t.A.size(), 1);
  q.insert(q.end(), t.B.size(), -1);
  return {std::move(p), std::move(q)};
}

}  // namespace

SymPolyMatrix build_S_signed(const GallaiGraph& h, const Terminals& t, Modulus m) {
  auto [p, q] = signed_pq(t);
  return build_S_pq(h, t, p, q, m);
}

IntPolyMatrix build_S_pq_int(const GallaiGraph& h, const Terminals& t,
                             std::span<const std::int64_t> p,
                             std::span<const std::int64_t> q) {
  const std::size_t two_tau = t.all().size();
  if (p.size() != two_tau || q.size() != two_tau)
    throw std::invalid_argument("build_S_pq_int: p,q must have one entry per terminal");
  IntPolyMatrix s(h.h);
  for (const auto& e : h.edges) {
    std::int64_t factor = 1;
    if (h.in_Et(e)) factor = p[t.rank_of(e.terminal)];
    else if (h.in_Ept(e)) factor = q[t.rank_of(e.terminal)];
    s.set(e.u, e.v, IntPoly::monomial(static_cast<int>(e.w), factor));
  }
  return s;
}

IntPolyMatrix build_S_int(const GallaiGraph& h) {
  IntPolyMatrix s(h.h);
  for (const auto& e : h.edges)
    s.set(e.u, e.v, IntPoly::monomial(static_cast<int>(e.w), 1));
  return s;
}

IntPolyMatrix build_S_signed_int(const GallaiGraph& h, const Terminals& t) {
  auto [p, q] = signed_pq(t);
  return build_S_pq_int(h, t, p, q);
}

PathPacking matching_to_packing(const GallaiGraph& h, const Terminals& t,
                                const Matching& m) {
  if (static_cast<int>(m.size()) != h.h)
    throw std::invalid_argument("matching_to_packing: partner array size mismatch");
  for (int v = 0; v < h.h; ++v)
    if (m[v] < 0 || m[v] >= h.h || m[v] == v || m[m[v]] != v)
      throw std::invalid_argument("matching_to_packing: not a perfect matching");

  std::vector<bool> is_term(h.h, false);
  for (int v : t.all()) is_term[v] = true;

  PathPacking out;
  std::vector<bool> done(h.h, false);
  for (int s : t.all()) {
    if (done[s]) continue;
    std::vector<int> path{s};
    done[s] = true;
    int cur = s;
    while (true) {
      const int z = m[cur];
      if (is_term[z]) {
        path.push_back(z);
        done[z] = true;
        break;
      }
      path.push_back(h.copy_of[z]);
      // continue through the link edge to z's mate
      const int orig = h.copy_of[z];
      const int mate = (z == orig) ? h.copy_idx[orig] : orig;
      cur = mate;
    }
    out.paths.push_back(std::move(path));
  }
  return canonical_packing(std::move(out));
}

}  // namespace hafpack
