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

#ifndef HAFPACK_MATRIX_HPP_
#define HAFPACK_MATRIX_HPP_

#include <span>
#include <vector>

#include "hafpack/poly2k.hpp"

namespace hafpack {

// Even-dimension symmetric matrix over TruncatedPoly with zero diagonal,
// indexed by unordered pairs {i,j} of 0-based indices. The class S(n,N) of
// polynomial matrices, with the shared Modulus carrying k and the cap d.
class SymPolyMatrix {
 public:
  SymPolyMatrix(int size, Modulus m);

  int size() const { return size_; }
  const Modulus& modulus() const { return mod_; }

  // at(i,i) is the (identically zero) diagonal.
  const TruncatedPoly& at(int i, int j) const;
  void set(int i, int j, TruncatedPoly v);

  SymPolyMatrix reduced(int new_k) const;

  // Matrix with the listed rows+columns removed, order of the rest preserved.
  // Indices must be distinct and in range.
  SymPolyMatrix minor_of(std::span<const int> removed) const;
  SymPolyMatrix minor2(int i, int j) const;
  SymPolyMatrix minor4(int i, int j, int p, int q) const;

  // A(i,j;c): add c times row/column i to row/column j, diagonal j stays zero.
  SymPolyMatrix with_ijc(int i, int j, const TruncatedPoly& c) const;
  void apply_ijc(int i, int j, const TruncatedPoly& c);

  // A(i->j): replace row/column j by row/column i; entry {i,j} becomes zero.
  SymPolyMatrix with_row_replaced(int i, int j) const;

  // Exchange row/column i with row/column j (leaves the hafnian unchanged).
  void swap_index(int i, int j);

  bool operator==(const SymPolyMatrix& o) const;

 private:
  int size_ = 0;
  Modulus mod_{};
  std::vector<TruncatedPoly> tri_;  // entry {i<j} at j*(j-1)/2 + i
  TruncatedPoly zero_;

  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * (j - 1) / 2 + i; }
  void check_pair(int i, int j) const;
};

}  // namespace hafpack

#endif  // HAFPACK_MATRIX_HPP_
