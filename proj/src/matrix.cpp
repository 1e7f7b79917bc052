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

#include "hafpack/matrix.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hafpack {

SymPolyMatrix::SymPolyMatrix(int size, Modulus m)
    : size_(size), mod_(m), zero_(m) {
  if (size < 0 || size % 2 != 0)
    throw std::invalid_argument("SymPolyMatrix: size must be even and >= 0");
  tri_.assign(static_cast<std::size_t>(size) * (size - 1) / 2, TruncatedPoly(m));
}

void SymPolyMatrix::check_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_)
    throw std::out_of_range("SymPolyMatrix: index out of range");
  if (i == j) throw std::invalid_argument("SymPolyMatrix: indices must differ");
}

const TruncatedPoly& SymPolyMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_)
    throw std::out_of_range("SymPolyMatrix: index out of range");
  if (i == j) return zero_;
  if (i > j) std::swap(i, j);
  return tri_[idx(i, j)];
}

void SymPolyMatrix::set(int i, int j, TruncatedPoly v) {
  check_pair(i, j);
  if (!(v.modulus() == mod_))
    throw std::invalid_argument("SymPolyMatrix: entry modulus mismatch");
  if (i > j) std::swap(i, j);
  tri_[idx(i, j)] = std::move(v);
}

SymPolyMatrix SymPolyMatrix::reduced(int new_k) const {
  SymPolyMatrix r(size_, Modulus(new_k, mod_.d));
  for (int j = 1; j < size_; ++j)
    for (int i = 0; i < j; ++i) {
      const TruncatedPoly& e = tri_[idx(i, j)];
      if (!e.is_zero()) r.tri_[r.idx(i, j)] = e.reduced(new_k);
    }
  return r;
}

SymPolyMatrix SymPolyMatrix::minor_of(std::span<const int> removed) const {
  std::vector<int> rem(removed.begin(), removed.end());
  std::sort(rem.begin(), rem.end());
  for (std::size_t t = 0; t < rem.size(); ++t) {
    if (rem[t] < 0 || rem[t] >= size_)
      throw std::out_of_range("minor_of: index out of range");
    if (t > 0 && rem[t] == rem[t - 1])
      throw std::invalid_argument("minor_of: repeated index");
  }
  std::vector<int> keep;
  keep.reserve(size_ - rem.size());
  std::size_t t = 0;
  for (int i = 0; i < size_; ++i) {
    if (t < rem.size() && rem[t] == i) {
      ++t;
      continue;
    }
    keep.push_back(i);
  }
  SymPolyMatrix r(static_cast<int>(keep.size()), mod_);
  for (std::size_t j = 1; j < keep.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const TruncatedPoly& e = at(keep[i], keep[j]);
      if (!e.is_zero()) r.tri_[r.idx(static_cast<int>(i), static_cast<int>(j))] = e;
    }
  return r;
}

SymPolyMatrix SymPolyMatrix::minor2(int i, int j) const {
  check_pair(i, j);
  const std::array<int, 2> rem{i, j};
  return minor_of(rem);
}

SymPolyMatrix SymPolyMatrix::minor4(int i, int j, int p, int q) const {
  const std::array<int, 4> rem{i, j, p, q};
  return minor_of(rem);
}

void SymPolyMatrix::apply_ijc(int i, int j, const TruncatedPoly& c) {
  check_pair(i, j);
  if (!(c.modulus() == mod_))
    throw std::invalid_argument("apply_ijc: c modulus mismatch");
  if (c.is_zero()) return;
  // Row/column j gains c times row/column i; the jj entry is put back to zero,
  // which the pair storage encodes implicitly. Entry {i,j} itself picks up
  // c * a_{ii} = 0, so only t outside {i,j} changes.
  for (int t = 0; t < size_; ++t) {
    if (t == i || t == j) continue;
    const TruncatedPoly& ait = at(i, t);
    if (ait.is_zero()) continue;
    TruncatedPoly v = at(j, t) + c * ait;
    set(j, t, std::move(v));
  }
}

SymPolyMatrix SymPolyMatrix::with_ijc(int i, int j, const TruncatedPoly& c) const {
  SymPolyMatrix r = *this;
  r.apply_ijc(i, j, c);
  return r;
}

SymPolyMatrix SymPolyMatrix::with_row_replaced(int i, int j) const {
  check_pair(i, j);
  SymPolyMatrix r = *this;
  for (int t = 0; t < size_; ++t) {
    if (t == i || t == j) continue;
    r.set(j, t, at(i, t));
  }
  r.set(i, j, TruncatedPoly(mod_));  // the copied diagonal entry a_{ii} = 0
  return r;
}

void SymPolyMatrix::swap_index(int i, int j) {
  check_pair(i, j);
  for (int t = 0; t < size_; ++t) {
    if (t == i || t == j) continue;
    TruncatedPoly a = at(i, t);
    TruncatedPoly b = at(j, t);
    set(i, t, std::move(b));
    set(j, t, std::move(a));
  }
}

bool SymPolyMatrix::operator==(const SymPolyMatrix& o) const {
  if (size_ != o.size_ || !(mod_ == o.mod_)) return false;
  return tri_ == o.tri_;
}

}  // namespace hafpack
