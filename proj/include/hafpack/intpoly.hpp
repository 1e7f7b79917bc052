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

#ifndef HAFPACK_INTPOLY_HPP_
#define HAFPACK_INTPOLY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace hafpack {

// Exact integer polynomial for the brute-force ground-truth side: no modulus,
// no truncation. Desk-scale coefficients only (int64).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  static IntPoly monomial(int degree, std::int64_t c);
  static IntPoly one() { return monomial(0, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int i) const;
  std::int64_t constant_term() const { return coeff(0); }
  // Lowest degree with a nonzero coefficient; -1 for zero.
  int lowest_degree() const;

  IntPoly& operator+=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(std::int64_t s) const;

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;  // human-readable, for test diagnostics

 private:
  std::vector<std::int64_t> coeffs_;
  void trim();
};

// Symmetric zero-diagonal matrix over IntPoly, same indexing conventions as
// SymPolyMatrix.
class IntPolyMatrix {
 public:
  explicit IntPolyMatrix(int size);
  int size() const { return size_; }
  const IntPoly& at(int i, int j) const;
  void set(int i, int j, IntPoly v);

 private:
  int size_;
  std::vector<IntPoly> tri_;
  IntPoly zero_;
};

// Exact hafnian by pairing enumeration (zero-pruned). Throws
// std::invalid_argument above the size cap.
IntPoly haf_exact(const IntPolyMatrix& a, int size_cap = 16);

}  // namespace hafpack

#endif  // HAFPACK_INTPOLY_HPP_
