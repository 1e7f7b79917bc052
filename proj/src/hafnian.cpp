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

#include "hafpack/hafnian.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hafpack {

// ---------------------------------------------------------------------------
// Brute force over pairings
// ---------------------------------------------------------------------------

namespace {

void haf_brute_rec(const SymPolyMatrix& a, std::uint32_t used,
                   const TruncatedPoly& prod, TruncatedPoly& acc) {
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
    const TruncatedPoly& e = a.at(i, j);
    if (e.is_zero()) continue;
    haf_brute_rec(a, used | (1u << j), prod * e, acc);
  }
}

}  // namespace

TruncatedPoly haf_bruteforce(const SymPolyMatrix& a, int size_cap) {
  if (a.size() > size_cap)
    throw std::invalid_argument("haf_bruteforce: size above enumeration cap");
  TruncatedPoly acc(a.modulus());
  haf_brute_rec(a, 0, TruncatedPoly::one(a.modulus()), acc);
  return acc;
}

// ---------------------------------------------------------------------------
// GF(2^t)
// ---------------------------------------------------------------------------

namespace detail {

namespace {

// Primitive polynomials (LFSR taps), degree 1..16; bit t is the leading term.
constexpr std::uint32_t kPrimitivePoly[17] = {
    0,      0x3,    0x7,   0xB,    0x13,   0x25,   0x43,   0x83,  0x11D,
    0x211,  0x409,  0x805, 0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};

}  // namespace

Gf2Field::Gf2Field(int t) : t_(t) {
  if (t < 1 || t > 16) throw std::invalid_argument("Gf2Field: t out of range");
  const std::uint32_t mod = kPrimitivePoly[t];
  const std::uint32_t size = std::uint32_t{1} << t;
  log_.assign(size, 0);
  exp_.assign(2 * size, 0);
  std::uint32_t cur = 1;
  std::vector<bool> seen(size, false);
  for (std::uint32_t i = 0; i < size - 1; ++i) {
    exp_[i] = static_cast<std::uint16_t>(cur);
    exp_[i + size - 1] = static_cast<std::uint16_t>(cur);
    if (seen[cur]) throw std::logic_error("Gf2Field: generator cycle too short");
    seen[cur] = true;
    log_[cur] = static_cast<std::uint16_t>(i);
    cur <<= 1;
    if (cur & size) cur ^= mod;
  }
  if (cur != 1) throw std::logic_error("Gf2Field: modulus is not primitive");
}

std::uint32_t Gf2Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("Gf2Field: inverse of zero");
  return exp_[(order() - log_[a]) % order()];
}

// ---------------------------------------------------------------------------
// Determinant backends over GF(2)[x]
// ---------------------------------------------------------------------------

namespace {

// Evaluate a GF(2) polynomial at a field point given the table of powers.
std::uint32_t eval_at(const Gf2Poly& p, const std::vector<std::uint32_t>& pow) {
  std::uint32_t acc = 0;
  const int dg = p.degree();
  for (int i = 0; i <= dg; ++i)
    if (p.get(i)) acc ^= pow[i];
  return acc;
}

std::uint32_t det_eval(std::vector<std::uint32_t> m, int h, const Gf2Field& f) {
  std::uint32_t det = 1;
  for (int c = 0; c < h; ++c) {
    int piv = -1;
    for (int r = c; r < h; ++r)
      if (m[static_cast<std::size_t>(r) * h + c]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c)
      for (int j = c; j < h; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * h + j],
                  m[static_cast<std::size_t>(c) * h + j]);
    const std::uint32_t p = m[static_cast<std::size_t>(c) * h + c];
    det = f.mul(det, p);  // char 2: row swaps do not flip the sign
    const std::uint32_t pinv = f.inv(p);
    for (int r = c + 1; r < h; ++r) {
      const std::uint32_t x = m[static_cast<std::size_t>(r) * h + c];
      if (!x) continue;
      const std::uint32_t factor = f.mul(x, pinv);
      for (int j = c; j < h; ++j)
        m[static_cast<std::size_t>(r) * h + j] ^=
            f.mul(factor, m[static_cast<std::size_t>(c) * h + j]);
    }
  }
  return det;
}

}  // namespace

Gf2Poly gf2_det_interpolate(const std::vector<Gf2Poly>& m, int h, int deg_bound) {
  if (h == 0) return Gf2Poly::one();
  const int points = deg_bound + 1;
  int t = 1;
  while ((1 << t) < points) ++t;
  if (t > 16)
    throw std::invalid_argument("gf2_det_interpolate: degree bound too large");
  const Gf2Field f(t);

  int max_entry_deg = 0;
  for (const Gf2Poly& e : m) max_entry_deg = std::max(max_entry_deg, e.degree());

  std::vector<std::uint32_t> ys(points);
  std::vector<std::uint32_t> pow(max_entry_deg + 1);
  std::vector<std::uint32_t> ev(static_cast<std::size_t>(h) * h);
  for (int x0 = 0; x0 < points; ++x0) {
    pow[0] = 1;
    for (int i = 1; i <= max_entry_deg; ++i)
      pow[i] = f.mul(pow[i - 1], static_cast<std::uint32_t>(x0));
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < h; ++c)
        ev[static_cast<std::size_t>(r) * h + c] =
            eval_at(m[static_cast<std::size_t>(r) * h + c], pow);
    ys[x0] = det_eval(ev, h, f);
  }

  // Lagrange through the points 0..points-1 (raw bit patterns as elements).
  // master(x) = prod (x + x_i); per point, divide it out synthetically.
  std::vector<std::uint32_t> master(points + 1, 0);
  master[0] = 1;
  int deg = 0;
  for (int i = 0; i < points; ++i) {
    const std::uint32_t xi = static_cast<std::uint32_t>(i);
    for (int j = deg + 1; j >= 1; --j)
      master[j] = master[j - 1] ^ f.mul(master[j], xi);
    master[0] = f.mul(master[0], xi);
    ++deg;
  }
  std::vector<std::uint32_t> coeffs(points, 0);
  std::vector<std::uint32_t> q(points);
  for (int i = 0; i < points; ++i) {
    if (ys[i] == 0) continue;
    const std::uint32_t xi = static_cast<std::uint32_t>(i);
    // q = master / (x + xi), top down.
    std::uint32_t carry = master[points];
    for (int j = points - 1; j >= 0; --j) {
      q[j] = carry;
      carry = master[j] ^ f.mul(carry, xi);
    }
    // denom = q(xi)
    std::uint32_t denom = 0, xp = 1;
    for (int j = 0; j < points; ++j) {
      denom ^= f.mul(q[j], xp);
      xp = f.mul(xp, xi);
    }
    const std::uint32_t scale = f.mul(ys[i], f.inv(denom));
    for (int j = 0; j < points; ++j) coeffs[j] ^= f.mul(scale, q[j]);
  }

  Gf2Poly det;
  for (int j = 0; j < points; ++j) {
    if (coeffs[j] == 0) continue;
    if (coeffs[j] != 1)
      throw std::logic_error("gf2_det_interpolate: coefficient outside GF(2)");
    det.set(j);
  }
  return det;
}

Gf2Poly gf2_det_bareiss(std::vector<Gf2Poly> m, int h) {
  if (h == 0) return Gf2Poly::one();
  auto at = [&](int r, int c) -> Gf2Poly& {
    return m[static_cast<std::size_t>(r) * h + c];
  };
  Gf2Poly prev = Gf2Poly::one();
  for (int c = 0; c < h - 1; ++c) {
    // Pivot: nonzero entry of minimal degree in this column (keeps growth low).
    int piv = -1;
    for (int r = c; r < h; ++r) {
      if (at(r, c).is_zero()) continue;
      if (piv < 0 || at(r, c).degree() < at(piv, c).degree()) piv = r;
    }
    if (piv < 0) return Gf2Poly{};
    if (piv != c)
      for (int j = c; j < h; ++j) std::swap(at(piv, j), at(c, j));
    for (int r = c + 1; r < h; ++r) {
      for (int j = c + 1; j < h; ++j) {
        Gf2Poly num = at(c, c).mul(at(r, j));
        num.xor_shifted(at(r, c).mul(at(c, j)), 0);
        at(r, j) = num.div_exact(prev);
      }
      at(r, c) = Gf2Poly{};
    }
    prev = at(c, c);
  }
  return at(h - 1, h - 1);
}

Gf2Poly gf2_haf_pairing(const std::vector<Gf2Poly>& m, int h, int cap) {
  Gf2Poly acc;
  auto rec = [&](auto&& self, std::uint32_t used, const Gf2Poly& prod) -> void {
    int i = 0;
    while (i < h && (used >> i & 1u)) ++i;
    if (i == h) {
      acc.xor_shifted(prod, 0);
      return;
    }
    used |= 1u << i;
    for (int j = i + 1; j < h; ++j) {
      if (used >> j & 1u) continue;
      const Gf2Poly& e = m[static_cast<std::size_t>(i) * h + j];
      if (e.is_zero()) continue;
      self(self, used | (1u << j), prod.mul_trunc(e, cap));
    }
  };
  rec(rec, 0, Gf2Poly::one());
  acc.truncate(cap);
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// haf mod 2 (Pfaffian route)
// ---------------------------------------------------------------------------

namespace {

// Interpolation is O(points^2); past this many points Bareiss wins.
constexpr int kInterpPointCap = 1024;

}  // namespace

TruncatedPoly haf_mod2(const SymPolyMatrix& a) {
  const int h = a.size();
  const int d = a.modulus().d;
  const Modulus out(1, d);
  if (h == 0) return TruncatedPoly::one(out);
  if (h == 2) return a.at(0, 1).reduced(1);

  std::vector<Gf2Poly> m(static_cast<std::size_t>(h) * h);
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) {
      const TruncatedPoly& e = a.at(i, j);
      Gf2Poly g;
      for (int t = 0; t <= e.stored_degree(); ++t)
        if (e.coeff(t) & 1u) g.set(t);
      m[static_cast<std::size_t>(i) * h + j] = g;
      m[static_cast<std::size_t>(j) * h + i] = std::move(g);
    }

  Gf2Poly pf;
  if (h <= 8) {
    pf = detail::gf2_haf_pairing(m, h, d);
  } else {
    // Over GF(2) a symmetric zero-diagonal matrix is skew, det = pf^2.
    int det_deg_bound = 0;
    bool zero_row = false;
    for (int i = 0; i < h; ++i) {
      int rowmax = -1;
      for (int j = 0; j < h; ++j)
        rowmax = std::max(rowmax, m[static_cast<std::size_t>(i) * h + j].degree());
      if (rowmax < 0) {
        zero_row = true;
        break;
      }
      det_deg_bound += rowmax;
    }
    Gf2Poly det;
    if (!zero_row) {
      det = det_deg_bound + 1 <= kInterpPointCap
                ? detail::gf2_det_interpolate(m, h, det_deg_bound)
                : detail::gf2_det_bareiss(std::move(m), h);
    }
    // Frobenius square root: det has no odd-degree terms.
    const int dd = det.degree();
    for (int i = 1; i <= dd; i += 2)
      if (det.get(i)) throw std::logic_error("haf_mod2: determinant is not a square");
    for (int i = 0; 2 * i <= dd; ++i)
      if (det.get(2 * i) && i <= d) pf.set(i);
  }

  std::vector<std::int64_t> coeffs(std::max(0, pf.degree()) + 1, 0);
  for (int i = 0; i <= pf.degree(); ++i)
    if (pf.get(i)) coeffs[i] = 1;
  return TruncatedPoly(out, coeffs);
}

// ---------------------------------------------------------------------------
// haf mod 2^k (Theorem-2.1-style recursion)
// ---------------------------------------------------------------------------

namespace {

TruncatedPoly haf2k_rec(const SymPolyMatrix& a) {
  const Modulus mod = a.modulus();
  const int h = a.size();
  if (h == 0) return TruncatedPoly::one(mod);
  if (h == 2) return a.at(0, 1);
  if (mod.k == 1) return haf_mod2(a);

  // Pivot column: smallest m(a_{0j}) among the non-even row-0 entries,
  // ties broken by index.
  int pivot_j = -1;
  int pivot_m = 0;
  for (int j = 1; j < h; ++j) {
    const auto mo = a.at(0, j).lowest_odd_degree();
    if (mo && (pivot_j < 0 || *mo < pivot_m)) {
      pivot_j = j;
      pivot_m = *mo;
    }
  }

  if (pivot_j < 0) {
    // Row 0 entirely even: expand haf A = sum_j a_{0j} haf A[0,j] with the
    // minors at modulus 2^{k-1}; the even factor makes the product exact.
    TruncatedPoly acc(mod);
    for (int j = 1; j < h; ++j) {
      const TruncatedPoly& e = a.at(0, j);
      if (e.is_zero()) continue;
      acc += e * haf2k_rec(a.minor2(0, j).reduced(mod.k - 1)).lifted(mod.k);
    }
    return acc;
  }

  SymPolyMatrix b = a;
  if (pivot_j != 1) b.swap_index(1, pivot_j);

  // Row operations (1,j;c_j) for j = 2..h-1, accumulating the replaced-row
  // correction sum_j c_j haf B_{j-1}(1->j) before each operation. Row 1 and
  // the pivot entry {0,1} are never touched by these operations.
  TruncatedPoly correction(mod);
  const TruncatedPoly& pivot = b.at(0, 1);
  for (int j = 2; j < h; ++j) {
    const TruncatedPoly target = b.at(0, j);
    if (target.is_even()) continue;
    const TruncatedPoly c = series_div_mod2(target, pivot);

    // haf B(1->j) = sum_{p<q not in {1,j}} 2 b_{1p} b_{1q} haf B[1,j,p,q];
    // the factor 2 makes modulus 2^{k-1} knowledge of the minors exact.
    TruncatedPoly inner(mod);
    for (int p = 0; p < h; ++p) {
      if (p == 1 || p == j) continue;
      const TruncatedPoly& bp = b.at(1, p);
      if (bp.is_zero()) continue;
      for (int q = p + 1; q < h; ++q) {
        if (q == 1 || q == j) continue;
        const TruncatedPoly& bq = b.at(1, q);
        if (bq.is_zero()) continue;
        const TruncatedPoly two_bpq = (bp * bq).scaled(2);
        if (two_bpq.is_zero()) continue;
        inner += two_bpq *
                 haf2k_rec(b.minor4(1, j, p, q).reduced(mod.k - 1)).lifted(mod.k);
      }
    }
    correction += c * inner;
    b.apply_ijc(1, j, c);
  }

  // Now row-0 entries of b are even for j >= 2.
  TruncatedPoly acc = b.at(0, 1) * haf2k_rec(b.minor2(0, 1));
  for (int j = 2; j < h; ++j) {
    const TruncatedPoly& e = b.at(0, j);
    if (e.is_zero()) continue;
    acc += e * haf2k_rec(b.minor2(0, j).reduced(mod.k - 1)).lifted(mod.k);
  }
  acc -= correction;
  return acc;
}

}  // namespace

TruncatedPoly haf_mod2k(const SymPolyMatrix& a, int k, int d) {
  const Modulus in = a.modulus();
  if (k < 1 || k > in.k)
    throw std::invalid_argument("haf_mod2k: k must satisfy 1 <= k <= input k");
  if (d < 0 || d > in.d)
    throw std::invalid_argument("haf_mod2k: d must satisfy 0 <= d <= input cap");
  if (k == in.k && d == in.d) return haf2k_rec(a);
  SymPolyMatrix r(a.size(), Modulus(k, d));
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) {
      const TruncatedPoly& e = a.at(i, j);
      if (e.is_zero()) continue;
      std::vector<std::int64_t> c;
      const int hi = std::min(d, e.stored_degree());
      c.reserve(hi + 1);
      for (int t = 0; t <= hi; ++t) c.push_back(e.coeff(t));
      r.set(i, j, TruncatedPoly(Modulus(k, d), c));
    }
  return haf2k_rec(r);
}

TruncatedPoly haf_mod2k(const SymPolyMatrix& a) {
  return haf2k_rec(a);
}

}  // namespace hafpack
