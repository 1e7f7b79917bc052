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

#ifndef HAFPACK_POLY2K_HPP_
#define HAFPACK_POLY2K_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hafpack {

// Arithmetic context shared by all polynomial values of one computation:
// coefficients live in Z/2^k and every term of degree > d is dropped.
struct Modulus {
  int k = 1;  // modulus is 2^k, 1 <= k <= 30
  int d = 0;  // degree cap, d >= 0

  Modulus() = default;
  Modulus(int k_in, int d_in);

  std::uint32_t mask() const { return (std::uint32_t{1} << k) - 1; }
  bool operator==(const Modulus&) const = default;
};

// Univariate polynomial with coefficients in Z/2^k, truncated at degree d.
// Coefficients are canonical representatives in [0, 2^k); trailing zeros are
// not stored, so equality is plain vector equality.
class TruncatedPoly {
 public:
  TruncatedPoly() = default;
  explicit TruncatedPoly(Modulus m) : mod_(m) {}
  // Coefficients listed lowest degree first; values outside [0, 2^k) and
  // negative values are reduced canonically. Entries past the cap are dropped.
  TruncatedPoly(Modulus m, const std::vector<std::int64_t>& coeffs);

  static TruncatedPoly monomial(Modulus m, int degree, std::int64_t coeff);
  static TruncatedPoly one(Modulus m) { return monomial(m, 0, 1); }

  const Modulus& modulus() const { return mod_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Highest stored degree; -1 for the zero polynomial.
  int stored_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint32_t coeff(int degree) const;

  // True iff every coefficient (degrees 0..d) is even.
  bool is_even() const;
  // m(f): lowest degree with an odd coefficient; nullopt iff is_even().
  std::optional<int> lowest_odd_degree() const;
  // Lowest-degree nonzero term, as (degree, coefficient); nullopt if zero.
  std::optional<std::pair<int, std::uint32_t>> leading_term() const;

  // Reduce to modulus 2^new_k (new_k <= k), same degree cap.
  TruncatedPoly reduced(int new_k) const;
  // Reinterpret the canonical representatives modulo 2^new_k (new_k >= k).
  TruncatedPoly lifted(int new_k) const;

  TruncatedPoly& operator+=(const TruncatedPoly& o);
  TruncatedPoly& operator-=(const TruncatedPoly& o);
  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) {
    a += b;
    return a;
  }
  friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) {
    a -= b;
    return a;
  }
  // Truncated convolution product.
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);

  TruncatedPoly negated() const;
  TruncatedPoly scaled(std::int64_t s) const;

  bool operator==(const TruncatedPoly& o) const;
  bool operator!=(const TruncatedPoly& o) const { return !(*this == o); }

  const std::vector<std::uint32_t>& raw_coeffs() const { return coeffs_; }

 private:
  Modulus mod_{};
  std::vector<std::uint32_t> coeffs_;

  void trim();
  friend TruncatedPoly series_div_mod2(const TruncatedPoly&, const TruncatedPoly&);
};

// Returns c with coefficients in {0,1} such that c*pivot + target is even
// (all coefficients up to the cap), by GF(2) power-series division.
// Requires: pivot not even; if target is not even then
// m(pivot) <= m(target). Throws std::invalid_argument otherwise.
TruncatedPoly series_div_mod2(const TruncatedPoly& target, const TruncatedPoly& pivot);

// Comma-separated coefficient list, lowest degree first: "3,0,1" = 3 + x^2.
TruncatedPoly parse_poly(Modulus m, std::string_view text);
// Inverse of parse_poly. With pad_to_degree >= 0 the list is padded with
// zeros up to that degree (the zero polynomial prints as "0").
std::string format_poly(const TruncatedPoly& p, int pad_to_degree = -1);

}  // namespace hafpack

#endif  // HAFPACK_POLY2K_HPP_
