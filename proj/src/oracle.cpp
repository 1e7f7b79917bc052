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

#include "hafpack/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hafpack {

// ---------------------------------------------------------------------------
// Packing enumeration
// ---------------------------------------------------------------------------

namespace {

struct PackingSearch {
  const Graph& g;
  const Terminals& t;
  const EnumerationBudget& budget;
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<bool> is_term;
  std::vector<bool> used;
  std::vector<int> terminals;
  std::vector<std::vector<int>> current;
  std::vector<PathPacking> out;
  long steps = 0;

  PackingSearch(const Graph& g_in, const Terminals& t_in,
                const EnumerationBudget& b)
      : g(g_in), t(t_in), budget(b), adj(g_in.adjacency()),
        is_term(g_in.n, false), used(g_in.n, false), terminals(t_in.all()) {
    for (int v : terminals) is_term[v] = true;
  }

  void tick() {
    if (++steps > budget.step_cap)
      throw BudgetExceeded("enumerate_packings: step budget exceeded");
  }

  int next_terminal() const {
    int best = -1;
    for (int v : terminals)
      if (!used[v] && (best < 0 || v < best)) best = v;
    return best;
  }

  void record() {
    if (static_cast<long>(out.size()) >= budget.packing_cap)
      throw BudgetExceeded("enumerate_packings: packing budget exceeded");
    PathPacking p;
    p.paths = current;
    out.push_back(canonical_packing(std::move(p)));
  }

  void extend(std::vector<int>& path) {
    tick();
    const int cur = path.back();
    for (auto [z, ei] : adj[cur]) {
      (void)ei;
      if (used[z]) continue;
      if (is_term[z]) {
        path.push_back(z);
        used[z] = true;
        current.push_back(path);
        cover_next();
        current.pop_back();
        used[z] = false;
        path.pop_back();
      } else {
        path.push_back(z);
        used[z] = true;
        extend(path);
        used[z] = false;
        path.pop_back();
      }
    }
  }

  void cover_next() {
    const int s = next_terminal();
    if (s < 0) {
      record();
      return;
    }
    used[s] = true;
    std::vector<int> path{s};
    extend(path);
    used[s] = false;
  }
};

}  // namespace

std::vector<PathPacking> enumerate_packings(const Graph& g, const Terminals& t,
                                            const EnumerationBudget& budget,
                                            const FamilyPredicate& family) {
  g.validate();
  t.validate(g.n);
  if (g.n > 2 * budget.node_cap)
    throw BudgetExceeded("enumerate_packings: node budget exceeded");
  PackingSearch search(g, t, budget);
  search.cover_next();
  std::vector<PathPacking> out = std::move(search.out);
  std::sort(out.begin(), out.end(),
            [](const PathPacking& a, const PathPacking& b) { return a.paths < b.paths; });
  if (family) {
    std::vector<PathPacking> kept;
    for (auto& p : out)
      if (family(packing_pmp(t, p))) kept.push_back(std::move(p));
    out = std::move(kept);
  }
  return out;
}

OracleResult shortest_packing_oracle(const Graph& g, const Terminals& t,
                                     const EnumerationBudget& budget,
                                     const FamilyPredicate& family) {
  const auto all = enumerate_packings(g, t, budget, family);
  OracleResult r;
  r.total_packings = static_cast<long>(all.size());
  for (const auto& p : all) {
    const std::int64_t w = packing_weight(g, p);
    if (r.optimal.empty() || w < r.min_weight) {
      r.min_weight = w;
      r.optimal.clear();
    }
    if (w == r.min_weight) r.optimal.push_back(p);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Matching enumeration
// ---------------------------------------------------------------------------

namespace {

struct MatchingSearch {
  const GallaiGraph& h;
  const EnumerationBudget& budget;
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<int> partner;
  std::vector<Matching> out;
  long steps = 0;

  MatchingSearch(const GallaiGraph& h_in, const EnumerationBudget& b,
                 const std::vector<bool>* removed)
      : h(h_in), budget(b), adj(h_in.adjacency()), partner(h_in.h, -1) {
    if (removed)
      for (int v = 0; v < h_in.h; ++v)
        if ((*removed)[v]) partner[v] = -2;
  }

  void rec() {
    if (++steps > budget.step_cap)
      throw BudgetExceeded("enumerate_matchings: step budget exceeded");
    int v = -1;
    for (int i = 0; i < h.h; ++i)
      if (partner[i] == -1) {
        v = i;
        break;
      }
    if (v < 0) {
      if (static_cast<long>(out.size()) >= budget.matching_cap)
        throw BudgetExceeded("enumerate_matchings: matching budget exceeded");
      Matching m = partner;
      for (auto& x : m)
        if (x == -2) x = -1;  // removed nodes exposed in the output
      out.push_back(std::move(m));
      return;
    }
    for (auto [z, ei] : adj[v]) {
      (void)ei;
      if (partner[z] != -1) continue;
      partner[v] = z;
      partner[z] = v;
      rec();
      partner[v] = -1;
      partner[z] = -1;
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const GallaiGraph& h,
                                          const EnumerationBudget& budget,
                                          const std::vector<bool>* removed) {
  if (h.h > 2 * budget.node_cap)
    throw BudgetExceeded("enumerate_matchings: node budget exceeded");
  MatchingSearch search(h, budget, removed);
  search.rec();
  return std::move(search.out);
}

// ---------------------------------------------------------------------------
// Lemma structure verification
// ---------------------------------------------------------------------------

namespace {

IntPoly matching_value(const IntPolyMatrix& s, const Matching& m) {
  IntPoly prod = IntPoly::one();
  for (int v = 0; v < s.size(); ++v) {
    if (m[v] > v) prod = prod * s.at(v, m[v]);
  }
  return prod;
}

// The two matchings of H covering exactly one path's node set, path edges
// lifted alternately to the original and copy layers.
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
path_liftings(const GallaiGraph& h, const std::vector<int>& path) {
  auto lift = [&](int v, int layer) {
    const int c = h.copy_idx[v];
    return (layer == 1 && c >= 0) ? c : v;
  };
  std::vector<std::pair<int, int>> m1, m2;
  for (std::size_t p = 1; p < path.size(); ++p) {
    const int layer1 = (p % 2 == 1) ? 0 : 1;  // odd edge index: original layer
    m1.emplace_back(lift(path[p - 1], layer1), lift(path[p], layer1));
    m2.emplace_back(lift(path[p - 1], 1 - layer1), lift(path[p], 1 - layer1));
  }
  return {std::move(m1), std::move(m2)};
}

IntPoly edges_value(const IntPolyMatrix& s, const std::vector<std::pair<int, int>>& es) {
  IntPoly prod = IntPoly::one();
  for (auto [u, v] : es) prod = prod * s.at(u, v);
  return prod;
}

}  // namespace

LemmaHafsReport verify_lemma_hafs(const Graph& g0, const Terminals& t,
                                  const EnumerationBudget& budget) {
  LemmaHafsReport rep;
  rep.ok = true;

  const SubdividedGraph sub = subdivide_terminal_edges(g0, t);
  const Graph& g = sub.graph;
  const GallaiGraph h = build_gallai(g, t);
  if (h.h > 2 * budget.node_cap)
    throw BudgetExceeded("verify_lemma_hafs: node budget exceeded");
  const IntPolyMatrix s = build_S_signed_int(h, t);
  const int tau = t.tau();

  const auto matchings = enumerate_matchings(h, budget);
  rep.matchings = static_cast<long>(matchings.size());

  std::map<std::vector<std::vector<int>>, IntPoly> groups;
  IntPoly total;
  for (const auto& m : matchings) {
    const PathPacking p = matching_to_packing(h, t, m);
    const IntPoly v = matching_value(s, m);
    groups[p.paths] += v;
    total += v;
  }

  // Round trip: the packings reached from matchings are exactly all perfect
  // T-path packings.
  {
    const auto all = enumerate_packings(g, t, budget);
    std::vector<std::vector<std::vector<int>>> from_matchings;
    from_matchings.reserve(groups.size());
    for (const auto& [key, val] : groups) from_matchings.push_back(key);
    std::vector<std::vector<std::vector<int>>> enumerated;
    enumerated.reserve(all.size());
    for (const auto& p : all) enumerated.push_back(p.paths);
    std::sort(enumerated.begin(), enumerated.end());
    if (from_matchings != enumerated)
      rep.fail("matching-derived packings differ from enumerated packings");
  }

  // Definition cross-check: pairing enumeration equals the matching sum.
  if (haf_exact(s, h.h) != total)
    rep.fail("haf_bruteforce(S') != sum over matchings of s'(M)");

  std::int64_t best_ab_weight = -1;
  std::int64_t best_ab_coeff_sum = 0;

  for (const auto& [paths, group_sum] : groups) {
    ++rep.packings_checked;
    PathPacking p;
    p.paths = paths;

    // Per-path sign factors.
    IntPoly factor_prod = IntPoly::one();
    bool is_ab_member = true;
    for (const auto& path : paths) {
      auto [m1, m2] = path_liftings(h, path);
      IntPoly fsum = edges_value(s, m1) + edges_value(s, m2);
      const bool sA = t.in_A(path.front());
      const bool tA = t.in_A(path.back());
      std::int64_t w = 0;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        for (const Edge& e : g.edges)
          if ((e.u == path[i] && e.v == path[i + 1]) ||
              (e.v == path[i] && e.u == path[i + 1])) {
            w += e.w;
            break;
          }
      IntPoly expect;
      if (sA != tA) {
        is_ab_member = false;
        expect = IntPoly{};  // A-B path: the two liftings cancel
      } else if (!sA && (path.size() - 1) % 2 == 0) {
        expect = IntPoly::monomial(static_cast<int>(w), -2);  // even-length B-path
      } else {
        expect = IntPoly::monomial(static_cast<int>(w), 2);
      }
      if (fsum != expect)
        rep.fail("per-path sign factor mismatch on a path of packing");
      factor_prod = factor_prod * fsum;
    }

    // Residual series over H minus the packing's lifted node set.
    std::vector<bool> removed(h.h, false);
    for (const auto& path : paths)
      for (int v : path) {
        removed[v] = true;
        if (h.copy_idx[v] >= 0) removed[h.copy_idx[v]] = true;
      }
    IntPoly residual;
    for (const auto& m : enumerate_matchings(h, budget, &removed))
      residual += matching_value(s, m);
    if (residual.constant_term() != 1)
      rep.fail("residual series constant term != 1");

    if (group_sum != factor_prod * residual)
      rep.fail("group sum does not factor into path signs times residual");

    if (is_ab_member) {
      const std::int64_t w = packing_weight(g, p);
      const int theta = packing_theta(t, p);
      const std::int64_t contrib =
          (theta % 2 ? -1 : 1) * (std::int64_t{1} << tau);
      if (best_ab_weight < 0 || w < best_ab_weight) {
        best_ab_weight = w;
        best_ab_coeff_sum = 0;
      }
      if (w == best_ab_weight) best_ab_coeff_sum += contrib;
    }
  }

  if (best_ab_weight >= 0) {
    if (total.coeff(static_cast<int>(best_ab_weight)) != best_ab_coeff_sum)
      rep.fail("leading coefficient != signed 2^tau sum over shortest packings");
  } else if (!total.is_zero()) {
    rep.fail("no (A+B)-packing exists but haf S' is nonzero");
  }

  return rep;
}

}  // namespace hafpack
