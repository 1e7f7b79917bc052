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

#ifndef HAFPACK_GF2POLY_HPP_
#define HAFPACK_GF2POLY_HPP_

#include <cstdint>
#include <vector>

namespace hafpack {

// Polynomial over GF(2), packed 64 coefficients per word. Exact (no implicit
// truncation); callers truncate explicitly where a degree cap applies.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  bool is_zero() const { return words_.empty(); }
  int degree() const;      // -1 for zero
  int lowest_set() const;  // -1 for zero
  bool get(int i) const;
  void set(int i);
  void flip(int i);

  // *this ^= (o << shift)
  void xor_shifted(const Gf2Poly& o, int shift);
  // Exact product.
  Gf2Poly mul(const Gf2Poly& o) const;
  // Product with terms of degree > cap dropped.
  Gf2Poly mul_trunc(const Gf2Poly& o, int cap) const;
  // Exact quotient; requires that o divides *this (checked).
  Gf2Poly div_exact(const Gf2Poly& o) const;
  void truncate(int cap);  // drop terms of degree > cap

  std::size_t popcount() const;
  bool operator==(const Gf2Poly& o) const { return words_ == o.words_; }

  static Gf2Poly monomial(int deg);
  static Gf2Poly one() { return monomial(0); }

 private:
  std::vector<std::uint64_t> words_;
  void trim();
  void ensure(int bit);
};

}  // namespace hafpack

#endif  // HAFPACK_GF2POLY_HPP_
