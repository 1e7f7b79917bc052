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

#ifndef HAFPACK_PMP_HPP_
#define HAFPACK_PMP_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hafpack/gallai.hpp"
#include "hafpack/graph.hpp"

namespace hafpack {

enum class Parity : std::uint8_t { Odd, Even };

// Perfect matching with parity on the terminal ranks {0..2tau-1}: a pairing
// of the ranks with an odd/even label per pair.
struct Pmp {
  struct Pair {
    int s = 0;
    int t = 0;
    Parity parity = Parity::Odd;
  };
  std::vector<Pair> pairs;

  int tau() const { return static_cast<int>(pairs.size()); }
  void canonicalize();  // s < t within pairs, pairs sorted
  bool operator==(const Pmp& o) const;
  std::string str() const;  // e.g. {(12,o),(34,e)} in 1-based rank notation
};

// All PMPs on 2*tau ranks, pairings in lexicographic order, parities
// enumerated per pairing; for tau=2 this is exactly the 12-row table order.
std::vector<Pmp> all_pmps(int tau);

// [p,q]_{st,sigma} = p_s p_t + q_s q_t (odd) or p_s q_t + q_s p_t (even).
std::int64_t bracket(std::span<const std::int64_t> p,
                     std::span<const std::int64_t> q, int s, int t, Parity parity);
// Product of brackets over the pairs of m.
std::int64_t pmp_product(std::span<const std::int64_t> p,
                         std::span<const std::int64_t> q, const Pmp& m);

struct HRepTerm {
  std::int64_t n = 1;
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;
};

// h-representability certificate: M in family iff
// sum_i n_i * prod brackets(p^i, q^i) != 0 mod 2^k.
struct HRepresentation {
  int tau = 0;
  int k = 1;
  std::vector<HRepTerm> terms;

  void validate() const;
};

bool hrep_membership(const HRepresentation& rep, const Pmp& m);

// Built-in certificates.
HRepresentation abpack_certificate(int a_size, int b_size);  // k = tau+1
HRepresentation two_paths_certificate();                     // M_2, k = 2
HRepresentation two_paths_odd_certificate();                 // M_{2,odd}, k = 2

// The PMP induced by a packing: pairs of terminal ranks with the parity of
// each path's length.
Pmp packing_pmp(const Terminals& t, const PathPacking& p);

// Membership predicate over induced PMPs, shared by the solvers and oracles.
using FamilyPredicate = std::function<bool(const Pmp&)>;
// Every PMP whose pairs stay within the A-ranks or within the B-ranks.
FamilyPredicate abpack_family(const Terminals& t);
FamilyPredicate hrep_family(HRepresentation rep);
FamilyPredicate any_family();

// The linear-dependence certificate behind the three-disjoint-paths
// non-representability proof: b_{M1,chi} = b_{M2,chi} + b_{M3,chi} -
// b_{M4,chi} + b_{M5,chi} - b_{M6,chi} over all chi in {0,1}^6.
struct M3Report {
  int checked = 0;
  int holds = 0;
  std::vector<std::uint32_t> failing_chi;
  bool ok() const { return checked == holds; }
};
M3Report verify_m3_certificate();
const std::vector<Pmp>& m3_pmps();  // M1..M6

// haf S[p,q] = sum over chi of prod_i {chi_i p_i + (1-chi_i) q_i} haf S(chi),
// both sides by exact pairing enumeration.
struct ChiDecompositionReport {
  bool ok = false;
  std::string lhs;
  std::string rhs;
};
ChiDecompositionReport chi_decomposition_check(const GallaiGraph& h,
                                               const Terminals& t,
                                               std::span<const std::int64_t> p,
                                               std::span<const std::int64_t> q,
                                               int size_cap = 16);

// Certificate file format: first line "tau N k"; per term, n_i followed by
// the 2*tau entries of p^i and the 2*tau entries of q^i.
HRepresentation parse_certificate(std::istream& in);
std::string format_certificate(const HRepresentation& rep);

}  // namespace hafpack

#endif  // HAFPACK_PMP_HPP_
