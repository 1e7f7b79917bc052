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

#include "hafpack/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "hafpack/hafnian.hpp"

namespace hafpack {

std::optional<std::pair<int, std::uint32_t>> leading_term(const TruncatedPoly& p) {
  return p.leading_term();
}

namespace {

// sum_i n_i * haf S[p^i, q^i] mod 2^k, truncated at cap d, with every H-edge
// derived from delete_edge suppressed.
TruncatedPoly eval_scalar(const GallaiGraph& h, const Terminals& t,
                          const HRepresentation& rep, int d, int delete_edge) {
  const Modulus m(rep.k, d);
  TruncatedPoly acc(m);
  for (const auto& term : rep.terms) {
    const SymPolyMatrix s = build_S_pq(h, t, term.p, term.q, m, delete_edge);
    acc += haf_mod2k(s).scaled(term.n);
  }
  return acc;
}

// The selected edges must induce exactly tau disjoint terminal-to-terminal
// paths covering all terminals; anything else (branching, cycles, exposed
// terminals) signals a false uniqueness assumption.
std::optional<PathPacking> reconstruct_packing(const Graph& g, const Terminals& t,
                                               const std::vector<int>& selected) {
  std::vector<std::vector<int>> adj(g.n);
  for (int ei : selected) {
    adj[g.edges[ei].u].push_back(g.edges[ei].v);
    adj[g.edges[ei].v].push_back(g.edges[ei].u);
  }
  std::vector<bool> is_term(g.n, false);
  for (int v : t.all()) is_term[v] = true;
  for (int v = 0; v < g.n; ++v) {
    const std::size_t deg = adj[v].size();
    if (is_term[v] ? deg != 1 : (deg != 0 && deg != 2)) return std::nullopt;
  }

  PathPacking p;
  std::vector<bool> visited(g.n, false);
  std::size_t edges_used = 0;
  for (int s : t.all()) {
    if (visited[s]) continue;
    std::vector<int> path{s};
    visited[s] = true;
    int prev = -1, cur = s;
    while (true) {
      int next = -1;
      for (int z : adj[cur])
        if (z != prev) {
          next = z;
          break;
        }
      if (next < 0 || visited[next]) return std::nullopt;
      ++edges_used;
      path.push_back(next);
      visited[next] = true;
      if (is_term[next]) break;
      prev = cur;
      cur = next;
    }
    p.paths.push_back(std::move(path));
  }
  if (edges_used != selected.size()) return std::nullopt;  // leftover cycles
  if (static_cast<int>(p.paths.size()) != t.tau()) return std::nullopt;
  p = canonical_packing(std::move(p));
  return p;
}

// Leading-term extraction plus one hafnian evaluation per deleted edge, on a
// graph with no terminal-terminal edges. Weights are the graph's own.
SolveResult solve_core(const Graph& g, const Terminals& t,
                       const HRepresentation& rep, int size_cap) {
  const GallaiGraph h = build_gallai(g, t);
  if (h.h > size_cap)
    throw std::invalid_argument("solver: Gallai graph above the size cap");

  SolveResult r;
  const std::int64_t wmax = std::max<std::int64_t>(1, g.max_weight());
  const std::int64_t cap_bound = static_cast<std::int64_t>(g.n) * wmax;
  const int d_max = static_cast<int>(cap_bound);

  // The truncation cap only has to reach the leading degree; start low and
  // double toward the certified bound.
  int d = static_cast<int>(
      std::min<std::int64_t>(d_max, std::max<std::int64_t>(8, 2 * t.tau() * wmax)));
  TruncatedPoly base(Modulus(rep.k, d));
  while (true) {
    base = eval_scalar(h, t, rep, d, -1);
    if (!base.is_zero() || d == d_max) break;
    d = static_cast<int>(std::min<std::int64_t>(d_max, 2 * static_cast<std::int64_t>(d)));
  }

  const auto lt = base.leading_term();
  if (!lt) {
    r.status = SolveStatus::Infeasible;
    return r;
  }
  const int wstar = lt->first;
  r.leading_degree = wstar;
  r.leading_coeff = lt->second;

  std::vector<int> selected;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const TruncatedPoly del = eval_scalar(h, t, rep, wstar, e);
    const auto dlt = del.leading_term();
    if (!dlt) {
      selected.push_back(e);  // leading degree rose past the cap (or to +inf)
      continue;
    }
    if (dlt->first < wstar)
      throw std::logic_error("solver: deletion lowered the leading degree");
  }

  auto packing = reconstruct_packing(g, t, selected);
  if (!packing || !validate_packing(g, t, *packing, hrep_family(rep))) {
    r.status = SolveStatus::NotUniqueOrInfeasible;
    return r;
  }
  r.status = SolveStatus::Solved;
  r.packing = std::move(*packing);
  r.weight = packing_weight(g, r.packing);
  return r;
}

}  // namespace

SolveResult solve_unique(const Graph& g, const Terminals& t) {
  g.validate();
  t.validate(g.n);
  const SubdividedGraph sub = subdivide_terminal_edges(g, t);
  const HRepresentation rep = abpack_certificate(static_cast<int>(t.A.size()),
                                                 static_cast<int>(t.B.size()));
  SolverConfig defaults;
  SolveResult r = solve_core(sub.graph, t, rep, defaults.size_cap);
  if (!r.solved()) return r;
  r.packing = project_packing(sub, r.packing);
  if (!validate_packing(g, t, r.packing, abpack_family(t))) {
    r.status = SolveStatus::NotUniqueOrInfeasible;
    return r;
  }
  r.weight = packing_weight(g, r.packing);
  return r;
}

WeightAssignment randomize_weights(const Graph& g, Rng& rng) {
  const std::int64_t m = static_cast<std::int64_t>(g.edges.size());
  if (m < 1) throw std::invalid_argument("randomize_weights: graph has no edges");
  const std::int64_t lo = 2 * m * g.n;
  WeightAssignment w(g.edges.size());
  for (auto& x : w) x = lo + static_cast<std::int64_t>(rng.below(2 * m));
  return w;
}

namespace {

SolveResult randomized_pipeline(const Graph& g_orig, const Terminals& t,
                                const Graph& g_for_algebra,
                                const SubdividedGraph* sub,
                                const HRepresentation& rep,
                                const FamilyPredicate& family,
                                const SolverConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("solver: trials must be >= 1");
  Rng rng(config.seed);
  bool saw_nonzero = false;
  SolveResult last;
  for (int trial = 1; trial <= config.trials; ++trial) {
    Graph gw = g_for_algebra;
    const WeightAssignment w = randomize_weights(gw, rng);
    for (std::size_t i = 0; i < gw.edges.size(); ++i) gw.edges[i].w = w[i];
    SolveResult r = solve_core(gw, t, rep, config.size_cap);
    r.trials_used = trial;
    if (r.status == SolveStatus::Solved) {
      PathPacking p = sub ? project_packing(*sub, r.packing) : r.packing;
      if (validate_packing(g_orig, t, p, family)) {
        r.packing = std::move(p);
        r.weight = packing_weight(g_orig, r.packing);
        return r;
      }
      saw_nonzero = true;
    } else if (r.status != SolveStatus::Infeasible) {
      saw_nonzero = true;
    }
    last = r;
  }
  SolveResult r;
  r.trials_used = config.trials;
  r.status = saw_nonzero ? SolveStatus::BudgetExhausted : SolveStatus::Infeasible;
  return r;
}

}  // namespace

SolveResult solve_randomized(const Graph& g, const Terminals& t,
                             const SolverConfig& config) {
  g.validate();
  t.validate(g.n);
  if (!g.uniform_weights())
    throw std::invalid_argument("solve_randomized: weights must be uniform (w == 1)");
  const SubdividedGraph sub = subdivide_terminal_edges(g, t);
  const HRepresentation rep = abpack_certificate(static_cast<int>(t.A.size()),
                                                 static_cast<int>(t.B.size()));
  return randomized_pipeline(g, t, sub.graph, &sub, rep, abpack_family(t), config);
}

SolveResult solve_hrep(const Graph& g, const Terminals& t,
                       const HRepresentation& rep, const SolverConfig& config) {
  g.validate();
  t.validate(g.n);
  rep.validate();
  if (2 * rep.tau != static_cast<int>(t.all().size()))
    throw std::invalid_argument("solve_hrep: certificate tau does not match |T|");
  std::vector<bool> is_term(g.n, false);
  for (int v : t.all()) is_term[v] = true;
  for (const Edge& e : g.edges)
    if (is_term[e.u] && is_term[e.v])
      throw std::invalid_argument(
          "solve_hrep: terminal-terminal edge present (parity would not survive subdivision)");
  if (!g.uniform_weights())
    throw std::invalid_argument("solve_hrep: weights must be uniform (w == 1)");
  return randomized_pipeline(g, t, g, nullptr, rep, hrep_family(rep), config);
}

bool validate_packing(const Graph& g, const Terminals& t, const PathPacking& p,
                      const FamilyPredicate& family) {
  if (static_cast<int>(p.paths.size()) != t.tau()) return false;
  std::vector<bool> is_term(g.n, false);
  for (int v : t.all()) is_term[v] = true;
  std::vector<bool> used(g.n, false);
  int terminals_covered = 0;
  for (const auto& path : p.paths) {
    if (path.size() < 2) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const int v = path[i];
      if (v < 0 || v >= g.n || used[v]) return false;
      used[v] = true;
      const bool endpoint = (i == 0 || i + 1 == path.size());
      if (endpoint != is_term[v]) return false;
      if (endpoint) ++terminals_covered;
      if (i + 1 < path.size() && !g.has_edge(path[i], path[i + 1])) return false;
    }
  }
  if (terminals_covered != 2 * t.tau()) return false;
  if (family && !family(packing_pmp(t, p))) return false;
  return true;
}

}  // namespace hafpack
