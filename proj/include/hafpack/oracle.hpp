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

#ifndef HAFPACK_ORACLE_HPP_
#define HAFPACK_ORACLE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hafpack/gallai.hpp"
#include "hafpack/graph.hpp"
#include "hafpack/intpoly.hpp"
#include "hafpack/pmp.hpp"

namespace hafpack {

struct EnumerationBudget {
  int node_cap = 16;
  long matching_cap = 500000;
  long packing_cap = 200000;
  long step_cap = 20000000;
};

// An exceeded budget aborts loudly; a silently truncated oracle would be
// worse than none.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// All perfect T-path packings (both path ends terminals, internal nodes
// non-terminal, all terminals covered), canonicalized. Optionally filtered.
std::vector<PathPacking> enumerate_packings(const Graph& g, const Terminals& t,
                                            const EnumerationBudget& budget = {},
                                            const FamilyPredicate& family = {});

struct OracleResult {
  std::int64_t min_weight = 0;
  std::vector<PathPacking> optimal;  // empty <=> infeasible
  long total_packings = 0;

  bool feasible() const { return !optimal.empty(); }
  bool unique() const { return optimal.size() == 1; }
};

OracleResult shortest_packing_oracle(const Graph& g, const Terminals& t,
                                     const EnumerationBudget& budget = {},
                                     const FamilyPredicate& family = {});

// All perfect matchings of H (or of the subgraph induced by the non-masked
// nodes), as partner arrays over the full index range.
std::vector<Matching> enumerate_matchings(const GallaiGraph& h,
                                          const EnumerationBudget& budget = {},
                                          const std::vector<bool>* removed = nullptr);

struct LemmaHafsReport {
  bool ok = false;
  int packings_checked = 0;
  long matchings = 0;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// Checks the signed-matrix factorization on one instance: matchings grouped
// by their packing, the per-path sign table (0 / -2x^w / +2x^w), the residual
// series with constant term 1, the packing round trip, and the leading
// coefficient sum over shortest packings.
LemmaHafsReport verify_lemma_hafs(const Graph& g, const Terminals& t,
                                  const EnumerationBudget& budget = {});

}  // namespace hafpack

#endif  // HAFPACK_ORACLE_HPP_
