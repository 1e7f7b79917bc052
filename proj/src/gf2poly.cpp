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

#include "hafpack/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace hafpack {

int Gf2Poly::degree() const {
  if (words_.empty()) return -1;
  const int w = static_cast<int>(words_.size()) - 1;
  return w * 64 + 63 - std::countl_zero(words_[w]);
}

int Gf2Poly::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w) * 64 + std::countr_zero(words_[w]);
  return -1;
}

bool Gf2Poly::get(int i) const {
  const std::size_t w = static_cast<std::size_t>(i) / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % 64)) & 1u;
}

void Gf2Poly::set(int i) {
  ensure(i);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void Gf2Poly::flip(int i) {
  ensure(i);
  words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  trim();
}

void Gf2Poly::ensure(int bit) {
  const std::size_t need = static_cast<std::size_t>(bit) / 64 + 1;
  if (words_.size() < need) words_.resize(need, 0);
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void Gf2Poly::xor_shifted(const Gf2Poly& o, int shift) {
  if (o.is_zero()) return;
  const int od = o.degree();
  ensure(od + shift);
  const int ws = shift / 64;
  const int bs = shift % 64;
  if (bs == 0) {
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i + ws] ^= o.words_[i];
  } else {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < o.words_.size(); ++i) {
      words_[i + ws] ^= (o.words_[i] << bs) | carry;
      carry = o.words_[i] >> (64 - bs);
    }
    if (carry) words_[o.words_.size() + ws] ^= carry;
  }
  trim();
}

Gf2Poly Gf2Poly::mul(const Gf2Poly& o) const {
  Gf2Poly r;
  if (is_zero() || o.is_zero()) return r;
  // Shift-and-xor over the sparser operand.
  const Gf2Poly& a = popcount() <= o.popcount() ? *this : o;
  const Gf2Poly& b = popcount() <= o.popcount() ? o : *this;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t bits = a.words_[w];
    while (bits) {
      const int i = static_cast<int>(w) * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      r.xor_shifted(b, i);
    }
  }
  return r;
}

Gf2Poly Gf2Poly::mul_trunc(const Gf2Poly& o, int cap) const {
  Gf2Poly r = mul(o);
  r.truncate(cap);
  return r;
}

void Gf2Poly::truncate(int cap) {
  if (cap < 0) {
    words_.clear();
    return;
  }
  const std::size_t keep = static_cast<std::size_t>(cap) / 64 + 1;
  if (words_.size() > keep) words_.resize(keep);
  if (!words_.empty()) {
    const int rem = cap % 64;
    if (rem != 63 && words_.size() == keep)
      words_.back() &= (std::uint64_t{1} << (rem + 1)) - 1;
  }
  trim();
}

std::size_t Gf2Poly::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

Gf2Poly Gf2Poly::monomial(int deg) {
  Gf2Poly p;
  p.set(deg);
  return p;
}

Gf2Poly Gf2Poly::div_exact(const Gf2Poly& o) const {
  if (o.is_zero()) throw std::invalid_argument("Gf2Poly: division by zero");
  Gf2Poly rem = *this;
  Gf2Poly q;
  const int od = o.degree();
  int rd = rem.degree();
  while (rd >= od) {
    const int s = rd - od;
    q.set(s);
    rem.xor_shifted(o, s);
    rd = rem.degree();
  }
  if (!rem.is_zero()) throw std::logic_error("Gf2Poly: division was not exact");
  return q;
}

}  // namespace hafpack
