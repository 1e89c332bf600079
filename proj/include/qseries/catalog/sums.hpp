#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qseries/bailey_a2.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/qbinomial.hpp"

namespace qseries::catalog {

// r1^2 - r1 r2 + r2^2, half the A2 Cartan form
inline int cartan_half(const Index2& r) { return r.first * r.first - r.first * r.second + r.second * r.second; }

inline int chi(bool b) { return b ? 1 : 0; }

inline int sign_of(int n) { return n % 2 == 0 ? 1 : -1; }

// Known to vanish; a truncated series without known terms may still carry a
// degree bound and is kept.
inline bool vanishes(const LaurentSeries& x) { return x.is_exact() && x.is_zero(); }

inline LaurentSeries mono(int e, int sign = 1) { return LaurentSeries::monomial(e, Integer(sign)); }

inline LaurentSeries one_minus_q(int e) { return LaurentSeries::one_minus(e); }

inline LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b, int order) {
  if (a.is_exact() && b.is_exact()) return a * b;
  return multiply(a, b, order);
}

inline LaurentSeries mul(std::initializer_list<LaurentSeries> xs, int order) {
  LaurentSeries r = LaurentSeries::one();
  for (const LaurentSeries& x : xs) {
    r = mul(r, x, order);
    if (vanishes(r)) break;
  }
  return r;
}

// 1/(q)_n, zero for n < 0
inline LaurentSeries rq(int n, int order) { return reciprocal_qpoch(n, order); }

// (q^d; q^d)_n
inline LaurentSeries dilated_qpoch(int d, int n) { return qpoch(n).dilated(d); }

// 1/(q^d; q^d)_n, zero for n < 0
inline LaurentSeries reciprocal_dilated_qpoch(int d, int n, int order) {
  if (n < 0) return LaurentSeries::zero();
  return reciprocal_of_unit(dilated_qpoch(d, n), order);
}

// 1/(q)_oo
inline LaurentSeries reciprocal_qpoch_infinite(int order) {
  return reciprocal_of_unit(infinite_product(qpow(1), 1, order), order);
}

// prod_e (q^e; q^modulus)_oo / (q)_oo^den
inline LaurentSeries product_side(const std::vector<int>& exponents, int modulus, int den, int order) {
  LaurentSeries r = LaurentSeries::one();
  for (int e : exponents) r = mul(r, infinite_product(qpow(e), modulus, order), order);
  const LaurentSeries inv = reciprocal_qpoch_infinite(order);
  for (int i = 0; i < den; ++i) r = mul(r, inv, order);
  return r.truncated(order);
}

// 1 / prod_e (q^e; q^modulus)_oo
inline LaurentSeries reciprocal_product(const std::vector<int>& exponents, int modulus, int order) {
  LaurentSeries r = LaurentSeries::one();
  for (int e : exponents) r = mul(r, infinite_product(qpow(e), modulus, order), order);
  return reciprocal_of_unit(r, order);
}

using Box = std::function<std::vector<Index2>(int level)>;
using LevelWeight = std::function<LaurentSeries(int level, const Index2& r)>;
using FinalWeight = std::function<LaurentSeries(const Index2& r)>;

// Nested sum over r^{(levels)} <= ... <= r^{(1)} <= L (componentwise) of
//   prod_j weight(j, r^{(j)}) final(r^{(levels)}) / prod_j (q)_{r^{(j-1)} - r^{(j)}},
// with r^{(0)} = L.  Without L the outermost factor 1/(q)_{L - r^{(1)}} is
// dropped (the L -> oo limit up to (q)_oo^{-2}).
inline LaurentSeries chain_sum(int levels, const LevelWeight& weight, const FinalWeight& final,
                               std::optional<Index2> L, const Box& box, int order) {
  auto edge = [&](const Index2& outer, const Index2& inner) {
    return mul(rq(outer.first - inner.first, order), rq(outer.second - inner.second, order), order);
  };
  std::map<Index2, LaurentSeries> g;
  for (const Index2& v : box(levels)) {
    LaurentSeries x = mul(weight(levels, v), final(v), order);
    if (!vanishes(x)) g.emplace(v, std::move(x));
  }
  for (int j = levels - 1; j >= 1; --j) {
    std::map<Index2, LaurentSeries> next;
    for (const Index2& v : box(j)) {
      LaurentSeries acc;
      for (const auto& [u, x] : g) {
        if (u.first > v.first || u.second > v.second) continue;
        acc += mul(x, edge(v, u), order);
      }
      if (vanishes(acc)) continue;
      acc = mul(weight(j, v), acc, order);
      if (!vanishes(acc)) next.emplace(v, std::move(acc));
    }
    g = std::move(next);
  }
  LaurentSeries total;
  for (const auto& [u, x] : g) {
    if (!L) {
      total += x;
    } else if (u.first <= L->first && u.second <= L->second) {
      total += mul(x, edge(*L, u), order);
    }
  }
  return total;
}

// All points of [lo1, hi1] x [lo2, hi2].
inline std::vector<Index2> rectangle(int lo1, int hi1, int lo2, int hi2) {
  std::vector<Index2> out;
  for (int a = lo1; a <= hi1; ++a)
    for (int b = lo2; b <= hi2; ++b) out.emplace_back(a, b);
  return out;
}

// Points with r >= 0 and r1^2 - r1 r2 + r2^2 <= limit.
inline std::vector<Index2> quadratic_box(int limit) {
  std::vector<Index2> out;
  for (int a = 0; 3 * a * a <= 4 * limit; ++a)
    for (int b = 0; 3 * b * b <= 4 * limit; ++b)
      if (cartan_half({a, b}) <= limit) out.emplace_back(a, b);
  return out;
}

using Matrix3 = std::array<std::array<LaurentSeries, 3>, 3>;

inline LaurentSeries det3(const Matrix3& m) {
  auto minor = [&](int r1, int c1, int r2, int c2) {
    const LaurentSeries& a = m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)];
    const LaurentSeries& b = m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)];
    const LaurentSeries& c = m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)];
    const LaurentSeries& d = m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)];
    return a * b - c * d;
  };
  LaurentSeries r;
  if (!m[0][0].is_zero()) r += m[0][0] * minor(1, 1, 2, 2);
  if (!m[0][1].is_zero()) r -= m[0][1] * minor(1, 0, 2, 2);
  if (!m[0][2].is_zero()) r += m[0][2] * minor(1, 0, 2, 1);
  return r;
}

// sum over k1 + k2 + k3 = 0, |k1|, |k2| <= reach of q^{prefix(k)} det_{s,t} entry(k, s, t),
// s, t = 1..3.  Entries must be exact; rows that vanish identically are skipped.
inline LaurentSeries determinant_sum(const std::function<int(const Triple&)>& prefix,
                                     const std::function<LaurentSeries(const Triple&, int, int)>& entry,
                                     int reach) {
  LaurentSeries total;
  for (int k1 = -reach; k1 <= reach; ++k1)
    for (int k2 = -reach; k2 <= reach; ++k2) {
      const Triple k{k1, k2, -k1 - k2};
      Matrix3 m;
      bool zero_row = false;
      for (int s = 1; s <= 3 && !zero_row; ++s) {
        bool any = false;
        for (int t = 1; t <= 3; ++t) {
          LaurentSeries e = entry(k, s, t);
          any = any || !e.is_zero();
          m[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)] = std::move(e);
        }
        zero_row = !any;
      }
      if (zero_row) continue;
      const LaurentSeries d = det3(m);
      if (!d.is_zero()) total += d.shifted(prefix(k));
    }
  return total;
}

// q-binomial times q^e
inline LaurentSeries qbin_shift(int n, int m, int e) {
  const LaurentSeries& b = qbinomial(n, m);
  return b.is_zero() ? LaurentSeries::zero() : b.shifted(e);
}

// (3k_s + 2s) k_s summed over s, halved
inline int linear_quadratic(const Triple& k) {
  int t = 0;
  for (int s = 0; s < 3; ++s) t += (3 * k[static_cast<std::size_t>(s)] + 2 * (s + 1)) * k[static_cast<std::size_t>(s)];
  return t / 2;
}

inline int square_sum(const Triple& k) { return k[0] * k[0] + k[1] * k[1] + k[2] * k[2]; }

inline int weighted_sum(const Triple& k) { return k[0] + 2 * k[1] + 3 * k[2]; }

}  // namespace qseries::catalog
