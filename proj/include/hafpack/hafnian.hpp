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

#ifndef HAFPACK_HAFNIAN_HPP_
#define HAFPACK_HAFNIAN_HPP_

#include <cstdint>
#include <vector>

#include "hafpack/gf2poly.hpp"
#include "hafpack/matrix.hpp"

namespace hafpack {

// Exact sum over all (2n-1)!! pairings, reduced by the matrix modulus.
// Throws std::invalid_argument above the size cap.
TruncatedPoly haf_bruteforce(const SymPolyMatrix& a, int size_cap = 12);

// Lower terms (degree <= d) of haf A modulo 2. The input may carry any k; it
// is reduced mod 2 first. Result modulus is {k=1, d}.
TruncatedPoly haf_mod2(const SymPolyMatrix& a);

// All lower terms of haf A modulo 2^k, by the row-operation expansion
// recursion (same-k minor, 2n-2 minors at k-1, and the replaced-row term via
// the four-index minors at k-1). Requires k <= a.modulus().k and
// d <= a.modulus().d.
TruncatedPoly haf_mod2k(const SymPolyMatrix& a, int k, int d);
TruncatedPoly haf_mod2k(const SymPolyMatrix& a);  // uses a's own modulus

namespace detail {

// GF(2^t), 1 <= t <= 16, log/exp table arithmetic. The generator x is
// verified to have full multiplicative order at construction.
class Gf2Field {
 public:
  explicit Gf2Field(int t);
  int t() const { return t_; }
  std::uint32_t order() const { return (std::uint32_t{1} << t_) - 1; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  int t_;
  std::vector<std::uint16_t> log_;
  std::vector<std::uint16_t> exp_;
};

// Exact determinant of a square GF(2)[x] matrix (row-major entries),
// by evaluation-interpolation over GF(2^t) with enough points for the full
// determinant degree. deg_bound must be >= deg(det).
Gf2Poly gf2_det_interpolate(const std::vector<Gf2Poly>& m, int h, int deg_bound);
// Exact determinant by fraction-free (Bareiss) elimination.
Gf2Poly gf2_det_bareiss(std::vector<Gf2Poly> m, int h);
// Hafnian mod 2 by direct pairing enumeration, truncated at cap.
Gf2Poly gf2_haf_pairing(const std::vector<Gf2Poly>& m, int h, int cap);

}  // namespace detail

}  // namespace hafpack

#endif  // HAFPACK_HAFNIAN_HPP_
