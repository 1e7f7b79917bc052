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

#include "hafpack/pmp.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace hafpack {

void Pmp::canonicalize() {
  for (auto& pr : pairs)
    if (pr.s > pr.t) std::swap(pr.s, pr.t);
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return std::tie(a.s, a.t) < std::tie(b.s, b.t);
  });
}

bool Pmp::operator==(const Pmp& o) const {
  if (pairs.size() != o.pairs.size()) return false;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].s != o.pairs[i].s || pairs[i].t != o.pairs[i].t ||
        pairs[i].parity != o.pairs[i].parity)
      return false;
  return true;
}

std::string Pmp::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ',';
    s += '(';
    s += std::to_string(pairs[i].s + 1);
    s += std::to_string(pairs[i].t + 1);
    s += pairs[i].parity == Parity::Odd ? ",o)" : ",e)";
  }
  s += '}';
  return s;
}

namespace {

void pairings_rec(std::vector<int>& left, std::vector<Pmp::Pair>& cur,
                  std::vector<std::vector<Pmp::Pair>>& out) {
  if (left.empty()) {
    out.push_back(cur);
    return;
  }
  const int s = left.front();
  for (std::size_t i = 1; i < left.size(); ++i) {
    const int t = left[i];
    std::vector<int> rest;
    for (std::size_t j = 1; j < left.size(); ++j)
      if (j != i) rest.push_back(left[j]);
    cur.push_back({s, t, Parity::Odd});
    pairings_rec(rest, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Pmp> all_pmps(int tau) {
  std::vector<int> ranks(2 * tau);
  for (int i = 0; i < 2 * tau; ++i) ranks[i] = i;
  std::vector<std::vector<Pmp::Pair>> pairings;
  std::vector<Pmp::Pair> cur;
  pairings_rec(ranks, cur, pairings);

  std::vector<Pmp> out;
  for (const auto& pairing : pairings) {
    const int npar = 1 << tau;
    for (int mask = 0; mask < npar; ++mask) {
      Pmp m;
      m.pairs = pairing;
      for (int i = 0; i < tau; ++i)
        m.pairs[i].parity = (mask >> i & 1) ? Parity::Even : Parity::Odd;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::int64_t bracket(std::span<const std::int64_t> p,
                     std::span<const std::int64_t> q, int s, int t,
                     Parity parity) {
  if (s == t) throw std::invalid_argument("bracket: s and t must differ");
  if (s < 0 || t < 0 || s >= static_cast<int>(p.size()) ||
      t >= static_cast<int>(p.size()) || p.size() != q.size())
    throw std::out_of_range("bracket: rank out of range");
  if (parity == Parity::Odd) return p[s] * p[t] + q[s] * q[t];
  return p[s] * q[t] + q[s] * p[t];
}

std::int64_t pmp_product(std::span<const std::int64_t> p,
                         std::span<const std::int64_t> q, const Pmp& m) {
  std::int64_t prod = 1;
  for (const auto& pr : m.pairs) prod *= bracket(p, q, pr.s, pr.t, pr.parity);
  return prod;
}

void HRepresentation::validate() const {
  if (tau < 1) throw std::invalid_argument("HRepresentation: tau must be >= 1");
  if (k < 1 || k > 30) throw std::invalid_argument("HRepresentation: k out of range");
  if (terms.empty()) throw std::invalid_argument("HRepresentation: no terms");
  for (const auto& t : terms)
    if (t.p.size() != static_cast<std::size_t>(2 * tau) ||
        t.q.size() != static_cast<std::size_t>(2 * tau))
      throw std::invalid_argument("HRepresentation: vector length != 2*tau");
}

bool hrep_membership(const HRepresentation& rep, const Pmp& m) {
  rep.validate();
  if (m.tau() != rep.tau)
    throw std::invalid_argument("hrep_membership: PMP tau mismatch");
  std::int64_t sum = 0;
  for (const auto& term : rep.terms) sum += term.n * pmp_product(term.p, term.q, m);
  const std::int64_t mod = std::int64_t{1} << rep.k;
  return ((sum % mod) + mod) % mod != 0;
}

HRepresentation abpack_certificate(int a_size, int b_size) {
  if (a_size < 0 || b_size < 0 || a_size % 2 || b_size % 2 || a_size + b_size == 0)
    throw std::invalid_argument("abpack_certificate: |A|, |B| must be even, not both 0");
  const int tau = (a_size + b_size) / 2;
  HRepresentation rep;
  rep.tau = tau;
  rep.k = tau + 1;
  HRepTerm t;
  t.n = 1;
  t.p.assign(2 * tau, 1);
  t.q.assign(a_size, 1);
  t.q.insert(t.q.end(), b_size, -1);
  rep.terms.push_back(std::move(t));
  return rep;
}

HRepresentation two_paths_certificate() {
  HRepresentation rep;
  rep.tau = 2;
  rep.k = 2;
  rep.terms.push_back({1, {1, 1, 1, 1}, {0, 1, -1, -1}});
  return rep;
}

HRepresentation two_paths_odd_certificate() {
  HRepresentation rep;
  rep.tau = 2;
  rep.k = 2;
  rep.terms.push_back({1, {1, 1, 1, 0}, {0, 0, 0, 1}});
  rep.terms.push_back({1, {1, 1, 0, 1}, {0, 0, 1, 0}});
  rep.terms.push_back({-1, {1, 0, 1, 1}, {0, 1, 0, 0}});
  rep.terms.push_back({-1, {0, 1, 1, 1}, {1, 0, 0, 0}});
  return rep;
}

Pmp packing_pmp(const Terminals& t, const PathPacking& p) {
  Pmp m;
  for (const auto& path : p.paths) {
    if (path.size() < 2) throw std::invalid_argument("packing_pmp: degenerate path");
    const int rs = t.rank_of(path.front());
    const int rt = t.rank_of(path.back());
    if (rs < 0 || rt < 0)
      throw std::invalid_argument("packing_pmp: path end is not a terminal");
    const int len = static_cast<int>(path.size()) - 1;
    m.pairs.push_back({rs, rt, len % 2 ? Parity::Odd : Parity::Even});
  }
  m.canonicalize();
  return m;
}

FamilyPredicate abpack_family(const Terminals& t) {
  const int a = static_cast<int>(t.A.size());
  return [a](const Pmp& m) {
    for (const auto& pr : m.pairs)
      if ((pr.s < a) != (pr.t < a)) return false;
    return true;
  };
}

FamilyPredicate hrep_family(HRepresentation rep) {
  return [rep = std::move(rep)](const Pmp& m) { return hrep_membership(rep, m); };
}

FamilyPredicate any_family() {
  return [](const Pmp&) { return true; };
}

const std::vector<Pmp>& m3_pmps() {
  // The six PMPs from the three-disjoint-paths argument, 0-based ranks.
  static const std::vector<Pmp> ms = [] {
    auto mk = [](std::initializer_list<std::tuple<int, int, Parity>> prs) {
      Pmp m;
      for (auto [s, t, par] : prs) m.pairs.push_back({s - 1, t - 1, par});
      m.canonicalize();
      return m;
    };
    using P = Parity;
    std::vector<Pmp> v;
    v.push_back(mk({{1, 2, P::Odd}, {3, 4, P::Odd}, {5, 6, P::Even}}));
    v.push_back(mk({{1, 2, P::Odd}, {3, 6, P::Odd}, {4, 5, P::Even}}));
    v.push_back(mk({{1, 4, P::Odd}, {2, 3, P::Odd}, {5, 6, P::Even}}));
    v.push_back(mk({{1, 4, P::Odd}, {3, 6, P::Odd}, {2, 5, P::Even}}));
    v.push_back(mk({{1, 6, P::Odd}, {2, 3, P::Even}, {4, 5, P::Odd}}));
    v.push_back(mk({{1, 6, P::Odd}, {3, 4, P::Even}, {2, 5, P::Odd}}));
    return v;
  }();
  return ms;
}

M3Report verify_m3_certificate() {
  const auto& ms = m3_pmps();
  M3Report rep;
  for (std::uint32_t chi = 0; chi < 64; ++chi) {
    std::vector<std::int64_t> p(6), q(6);
    for (int i = 0; i < 6; ++i) {
      p[i] = (chi >> i) & 1;
      q[i] = 1 - p[i];
    }
    std::int64_t b[6];
    for (int i = 0; i < 6; ++i) b[i] = pmp_product(p, q, ms[i]);
    ++rep.checked;
    if (b[0] == b[1] + b[2] - b[3] + b[4] - b[5]) ++rep.holds;
    else rep.failing_chi.push_back(chi);
  }
  return rep;
}

ChiDecompositionReport chi_decomposition_check(const GallaiGraph& h,
                                               const Terminals& t,
                                               std::span<const std::int64_t> p,
                                               std::span<const std::int64_t> q,
                                               int size_cap) {
  const int two_tau = static_cast<int>(t.all().size());
  const IntPoly lhs = haf_exact(build_S_pq_int(h, t, p, q), size_cap);
  IntPoly rhs;
  for (std::uint32_t chi = 0; chi < (1u << two_tau); ++chi) {
    std::int64_t coef = 1;
    std::vector<std::int64_t> pc(two_tau), qc(two_tau);
    for (int i = 0; i < two_tau; ++i) {
      const std::int64_t ci = (chi >> i) & 1;
      coef *= ci * p[i] + (1 - ci) * q[i];
      pc[i] = ci;
      qc[i] = 1 - ci;
    }
    if (coef == 0) continue;
    rhs += haf_exact(build_S_pq_int(h, t, pc, qc), size_cap).scaled(coef);
  }
  ChiDecompositionReport out;
  out.ok = lhs == rhs;
  out.lhs = lhs.str();
  out.rhs = rhs.str();
  return out;
}

HRepresentation parse_certificate(std::istream& in) {
  std::vector<long long> toks;
  std::vector<int> tok_line;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) {
      try {
        std::size_t used = 0;
        toks.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad integer '" + tok + "'");
      }
      tok_line.push_back(lineno);
    }
  }
  std::size_t pos = 0;
  auto take = [&](const char* what) -> long long {
    if (pos >= toks.size())
      throw ParseError(lineno, std::string("certificate truncated, expected ") + what);
    return toks[pos++];
  };
  const long long tau = take("tau");
  const long long big_n = take("N");
  const long long k = take("k");
  if (tau < 1 || tau > 8) throw ParseError(tok_line.empty() ? 1 : tok_line[0], "tau out of range");
  if (big_n < 1 || big_n > 64) throw ParseError(tok_line[1], "N out of range");
  if (k < 1 || k > 30) throw ParseError(tok_line[2], "k out of range");
  HRepresentation rep;
  rep.tau = static_cast<int>(tau);
  rep.k = static_cast<int>(k);
  for (long long i = 0; i < big_n; ++i) {
    HRepTerm term;
    term.n = take("n_i");
    for (int j = 0; j < 2 * rep.tau; ++j) term.p.push_back(take("p entry"));
    for (int j = 0; j < 2 * rep.tau; ++j) term.q.push_back(take("q entry"));
    rep.terms.push_back(std::move(term));
  }
  if (pos != toks.size())
    throw ParseError(tok_line[pos], "trailing data after certificate");
  rep.validate();
  return rep;
}

std::string format_certificate(const HRepresentation& rep) {
  std::ostringstream out;
  out << rep.tau << ' ' << rep.terms.size() << ' ' << rep.k << '\n';
  for (const auto& t : rep.terms) {
    out << t.n << '\n';
    for (std::size_t i = 0; i < t.p.size(); ++i) out << (i ? " " : "") << t.p[i];
    out << '\n';
    for (std::size_t i = 0; i < t.q.size(); ++i) out << (i ? " " : "") << t.q[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace hafpack
