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

#include "hafpack/poly2k.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "hafpack/gf2poly.hpp"

namespace hafpack {

namespace {

std::uint32_t canonical(std::int64_t v, std::uint32_t mask) {
  // mask = 2^k - 1; v may be negative.
  std::int64_t r = v & static_cast<std::int64_t>(mask);
  return static_cast<std::uint32_t>(r);
}

void require_same_modulus(const Modulus& a, const Modulus& b) {
  if (!(a == b)) {
    throw std::invalid_argument("mismatched Modulus (k or degree cap differ)");
  }
}

}  // namespace

Modulus::Modulus(int k_in, int d_in) : k(k_in), d(d_in) {
  if (k < 1 || k > 30) throw std::invalid_argument("Modulus: k must be in [1,30]");
  if (d < 0) throw std::invalid_argument("Modulus: degree cap must be >= 0");
}

TruncatedPoly::TruncatedPoly(Modulus m, const std::vector<std::int64_t>& coeffs)
    : mod_(m) {
  const int n = std::min<int>(static_cast<int>(coeffs.size()), m.d + 1);
  coeffs_.resize(n);
  for (int i = 0; i < n; ++i) coeffs_[i] = canonical(coeffs[i], m.mask());
  trim();
}

TruncatedPoly TruncatedPoly::monomial(Modulus m, int degree, std::int64_t coeff) {
  TruncatedPoly p(m);
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (degree > m.d) return p;  // a higher term is dropped
  const std::uint32_t c = canonical(coeff, m.mask());
  if (c == 0) return p;
  p.coeffs_.assign(degree + 1, 0);
  p.coeffs_[degree] = c;
  return p;
}

std::uint32_t TruncatedPoly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[degree];
}

bool TruncatedPoly::is_even() const {
  for (std::uint32_t c : coeffs_)
    if (c & 1u) return false;
  return true;
}

std::optional<int> TruncatedPoly::lowest_odd_degree() const {
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
    if (coeffs_[i] & 1u) return i;
  return std::nullopt;
}

std::optional<std::pair<int, std::uint32_t>> TruncatedPoly::leading_term() const {
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
    if (coeffs_[i] != 0) return std::make_pair(i, coeffs_[i]);
  return std::nullopt;
}

TruncatedPoly TruncatedPoly::reduced(int new_k) const {
  if (new_k > mod_.k) throw std::invalid_argument("reduced: new_k exceeds current k");
  TruncatedPoly r(Modulus(new_k, mod_.d));
  r.coeffs_.resize(coeffs_.size());
  const std::uint32_t m = r.mod_.mask();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] & m;
  r.trim();
  return r;
}

TruncatedPoly TruncatedPoly::lifted(int new_k) const {
  if (new_k < mod_.k) throw std::invalid_argument("lifted: new_k below current k");
  TruncatedPoly r(Modulus(new_k, mod_.d));
  r.coeffs_ = coeffs_;
  return r;
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o) {
  require_same_modulus(mod_, o.mod_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  const std::uint32_t m = mod_.mask();
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) & m;
  trim();
  return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& o) {
  require_same_modulus(mod_, o.mod_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  const std::uint32_t m = mod_.mask();
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = (coeffs_[i] + (m + 1 - o.coeffs_[i])) & m;
  trim();
  return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  require_same_modulus(a.modulus(), b.modulus());
  const Modulus mod = a.modulus();
  TruncatedPoly r(mod);
  if (a.is_zero() || b.is_zero()) return r;

  const auto& ca = a.raw_coeffs();
  const auto& cb = b.raw_coeffs();
  // Iterate over the operand with fewer nonzero coefficients; matrices in this
  // domain are monomial-heavy, so this is usually a handful of shifts.
  auto nnz = [](const std::vector<std::uint32_t>& v) {
    std::size_t c = 0;
    for (std::uint32_t x : v) c += (x != 0);
    return c;
  };
  const bool swap = nnz(ca) > nnz(cb);
  const auto& outer = swap ? cb : ca;
  const auto& inner = swap ? ca : cb;

  const int out_deg = std::min<int>(mod.d, a.stored_degree() + b.stored_degree());
  std::vector<std::uint64_t> acc(out_deg + 1, 0);
  const std::uint64_t m = mod.mask();
  for (int i = 0; i < static_cast<int>(outer.size()); ++i) {
    const std::uint64_t oi = outer[i];
    if (oi == 0) continue;
    const int jmax = std::min<int>(static_cast<int>(inner.size()) - 1, out_deg - i);
    for (int j = 0; j <= jmax; ++j) {
      acc[i + j] = (acc[i + j] + oi * inner[j]) & m;
    }
  }
  std::vector<std::int64_t> out(acc.begin(), acc.end());
  return TruncatedPoly(mod, out);
}

TruncatedPoly TruncatedPoly::negated() const {
  TruncatedPoly r(mod_);
  r.coeffs_.resize(coeffs_.size());
  const std::uint32_t m = mod_.mask();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = (m + 1 - coeffs_[i]) & m;
  r.trim();
  return r;
}

TruncatedPoly TruncatedPoly::scaled(std::int64_t s) const {
  const std::uint64_t c = canonical(s, mod_.mask());
  TruncatedPoly r(mod_);
  if (c == 0) return r;
  r.coeffs_.resize(coeffs_.size());
  const std::uint64_t m = mod_.mask();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = static_cast<std::uint32_t>((coeffs_[i] * c) & m);
  r.trim();
  return r;
}

bool TruncatedPoly::operator==(const TruncatedPoly& o) const {
  require_same_modulus(mod_, o.mod_);
  return coeffs_ == o.coeffs_;
}

void TruncatedPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TruncatedPoly series_div_mod2(const TruncatedPoly& target, const TruncatedPoly& pivot) {
  require_same_modulus(target.modulus(), pivot.modulus());
  const Modulus mod = target.modulus();

  const auto mp = pivot.lowest_odd_degree();
  if (!mp) throw std::invalid_argument("series_div_mod2: pivot is even");
  const int m = *mp;
  const auto mt = target.lowest_odd_degree();
  if (mt && *mt < m)
    throw std::invalid_argument("series_div_mod2: m(pivot) > m(target)");

  TruncatedPoly c(mod);
  if (!mt) return c;  // target already even

  // pivot = x^m * u (mod 2) with u(0) = 1; divide (target / x^m) by u as a
  // GF(2) power series, truncated at degree d - m.
  const int cap = mod.d - m;
  Gf2Poly u, rem;
  for (int i = m; i <= pivot.stored_degree(); ++i)
    if (pivot.coeff(i) & 1u) u.set(i - m);
  for (int i = m; i <= target.stored_degree(); ++i)
    if (target.coeff(i) & 1u) rem.set(i - m);

  std::vector<std::int64_t> out(cap + 1, 0);
  while (!rem.is_zero()) {
    const int i = rem.lowest_set();
    if (i > cap) break;  // only parity up to the cap matters
    out[i] = 1;
    rem.xor_shifted(u, i);
  }
  return TruncatedPoly(mod, out);
}

TruncatedPoly parse_poly(Modulus m, std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    // trim spaces
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("empty coefficient in polynomial");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(tok), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + std::string(tok) + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("bad coefficient '" + std::string(tok) + "'");
    coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coeffs.size()) > m.d + 1)
    throw std::invalid_argument("polynomial has more coefficients than the degree cap allows");
  return TruncatedPoly(m, coeffs);
}

std::string format_poly(const TruncatedPoly& p, int pad_to_degree) {
  const int hi = std::max(p.stored_degree(), pad_to_degree >= 0 ? pad_to_degree : 0);
  std::string s;
  if (p.is_zero() && pad_to_degree < 0) return "0";
  for (int i = 0; i <= hi; ++i) {
    if (i) s += ',';
    s += std::to_string(p.coeff(i));
  }
  return s;
}

}  // namespace hafpack
