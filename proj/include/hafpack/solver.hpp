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

#ifndef HAFPACK_SOLVER_HPP_
#define HAFPACK_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "hafpack/graph.hpp"
#include "hafpack/pmp.hpp"
#include "hafpack/rng.hpp"

namespace hafpack {

struct SolverConfig {
  std::uint64_t seed = 1;
  int trials = 20;
  int tau_cap = 4;
  int size_cap = 24;  // Gallai graph node cap
};

using WeightAssignment = std::vector<std::int64_t>;  // per edge index

enum class SolveStatus {
  Solved,
  Infeasible,             // the hafnian scalar is identically zero
  NotUniqueOrInfeasible,  // edge selection did not reconstruct a packing
  BudgetExhausted,        // all randomized trials failed validation
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  PathPacking packing;
  std::int64_t weight = 0;
  int trials_used = 0;
  // Baseline leading term of the hafnian scalar (unique-case diagnostics).
  std::int64_t leading_degree = -1;
  std::uint32_t leading_coeff = 0;

  bool solved() const { return status == SolveStatus::Solved; }
};

// Lowest nonzero term of a truncated scalar; nullopt when identically zero.
std::optional<std::pair<int, std::uint32_t>> leading_term(const TruncatedPoly& p);

// Unique-optimum solver for the (A+B) family under the graph's own weights
// (terminal-terminal edges are subdivided internally). If the optimum is not
// unique the reconstruction fails and NotUniqueOrInfeasible is returned.
SolveResult solve_unique(const Graph& g, const Terminals& t);

// One weight per edge, independently uniform on {2mn, ..., 2mn+2m-1}.
WeightAssignment randomize_weights(const Graph& g, Rng& rng);

// Isolation-lemma solver for uniform unit weights.
SolveResult solve_randomized(const Graph& g, const Terminals& t,
                             const SolverConfig& config);

// Same pipeline with the scalar sum_i n_i haf S[p^i,q^i] mod 2^k in place of
// haf S'. Requires no terminal-terminal edges and uniform unit weights.
SolveResult solve_hrep(const Graph& g, const Terminals& t,
                       const HRepresentation& rep, const SolverConfig& config);

// Node-disjointness, terminal endpoints, non-terminal interiors, perfection
// (tau paths covering all terminals), edges present in g, and family
// membership of the induced PMP.
bool validate_packing(const Graph& g, const Terminals& t, const PathPacking& p,
                      const FamilyPredicate& family);

}  // namespace hafpack

#endif  // HAFPACK_SOLVER_HPP_
