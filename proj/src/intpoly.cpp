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

#include "hafpack/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hafpack {

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::monomial(int degree, std::int64_t c) {
  IntPoly p;
  if (c == 0) return p;
  if (degree < 0) throw std::invalid_argument("IntPoly: negative degree");
  p.coeffs_.assign(degree + 1, 0);
  p.coeffs_[degree] = c;
  return p;
}

std::int64_t IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

int IntPoly::lowest_degree() const {
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
    if (coeffs_[i] != 0) return i;
  return -1;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

IntPoly IntPoly::scaled(std::int64_t s) const {
  IntPoly r;
  if (s == 0) return r;
  r.coeffs_ = coeffs_;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeff(i));
  }
  return s;
}

IntPolyMatrix::IntPolyMatrix(int size) : size_(size) {
  if (size < 0 || size % 2 != 0)
    throw std::invalid_argument("IntPolyMatrix: size must be even and >= 0");
  tri_.assign(static_cast<std::size_t>(size) * (size - 1) / 2, IntPoly{});
}

const IntPoly& IntPolyMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_)
    throw std::out_of_range("IntPolyMatrix: index out of range");
  if (i == j) return zero_;
  if (i > j) std::swap(i, j);
  return tri_[static_cast<std::size_t>(j) * (j - 1) / 2 + i];
}

void IntPolyMatrix::set(int i, int j, IntPoly v) {
  if (i == j) throw std::invalid_argument("IntPolyMatrix: indices must differ");
  if (i < 0 || j < 0 || i >= size_ || j >= size_)
    throw std::out_of_range("IntPolyMatrix: index out of range");
  if (i > j) std::swap(i, j);
  tri_[static_cast<std::size_t>(j) * (j - 1) / 2 + i] = std::move(v);
}

namespace {

void haf_exact_rec(const IntPolyMatrix& a, std::uint32_t used,
                   const IntPoly& prod, IntPoly& acc) {
  const int h = a.size();
  int i = 0;
  while (i < h && (used >> i & 1u)) ++i;
  if (i == h) {
    acc += prod;
    return;
  }
  used |= 1u << i;
  for (int j = i + 1; j < h; ++j) {
    if (used >> j & 1u) continue;
    const IntPoly& e = a.at(i, j);
    if (e.is_zero()) continue;
    haf_exact_rec(a, used | (1u << j), prod * e, acc);
  }
}

}  // namespace

IntPoly haf_exact(const IntPolyMatrix& a, int size_cap) {
  if (a.size() > size_cap)
    throw std::invalid_argument("haf_exact: size above enumeration cap");
  IntPoly acc;
  haf_exact_rec(a, 0, IntPoly::one(), acc);
  return acc;
}

}  // namespace hafpack
