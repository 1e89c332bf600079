#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/bailey_a1.hpp"
#include "qseries/catalog/determinant.hpp"
#include "qseries/catalog/gde.hpp"
#include "qseries/catalog/sums.hpp"
#include "qseries/errors.hpp"
#include "qseries/kostka.hpp"
#include "qseries/permutation.hpp"
#include "qseries/products.hpp"
#include "qseries/qbinomial.hpp"
#include "qseries/rational_function.hpp"
#include "qseries/supernomial.hpp"

namespace qseries::catalog {

using Params = std::map<std::string, int>;

struct Sides {
  LaurentSeries lhs;
  LaurentSeries rhs;
};

inline int arg(const Params& p, const char* name) {
  auto it = p.find(name);
  if (it == p.end()) throw DomainError(std::string("missing parameter '") + name + "'");
  return it->second;
}

namespace detail {

// Exact (q)_{n} / (q)_{m} for n >= m >= 0
inline LaurentSeries qpoch_ratio(int n, int m) { return qseries::detail::finite_product(qpow(m + 1), n - m); }

inline int mod3(int x) { return ((x % 3) + 3) % 3; }

inline Triple triple_of(int k1, int k2) { return {k1, k2, -k1 - k2}; }

inline int at(const Triple& k, int s) { return k[static_cast<std::size_t>(s - 1)]; }

inline LaurentSeries polynomial_of(const RationalFunction& f, const char* what) {
  auto p = f.as_polynomial();
  if (!p) throw std::logic_error(std::string(what) + " is not a Laurent polynomial");
  return *p;
}

// sum over n1 >= ... >= n_{levels} >= 0 below `top` of
//   prod_j q^{n_j^2 + linear(j) n_j} [n_{j-1}; n_j],  n_0 = top
inline LaurentSeries binomial_chain(int levels, int top, const std::function<int(int)>& linear) {
  std::map<int, LaurentSeries> f;
  for (int n = 0; n <= top; ++n) f[n] = LaurentSeries::one();
  for (int j = levels; j >= 1; --j) {
    std::map<int, LaurentSeries> g;
    for (int n = 0; n <= top; ++n) {
      LaurentSeries acc;
      for (int m = 0; m <= n; ++m) acc += qbinomial(n, m) * f[m].shifted(m * m + linear(j) * m);
      g[n] = std::move(acc);
    }
    f = std::move(g);
  }
  return f[top];
}

// sum over n1 >= ... >= n_{levels} >= 0 of
//   q^{sum n_j^2 + linear(j) n_j} / ((q)_{n1-n2} ... (q)_{n_{levels-1}-n_{levels}} last(n_{levels}))
inline LaurentSeries series_chain(int levels, const std::function<int(int)>& linear,
                                  const std::function<LaurentSeries(int)>& last, int order) {
  if (levels == 0) return LaurentSeries::one().truncated(order);
  int reach = 0;
  while ((reach + 1) * (reach + 1) <= order) ++reach;
  std::vector<LaurentSeries> f(static_cast<std::size_t>(reach + 1));
  for (int n = 0; n <= reach; ++n) f[static_cast<std::size_t>(n)] = mul(last(n), mono(n * n + linear(levels) * n), order);
  for (int j = levels - 1; j >= 1; --j) {
    std::vector<LaurentSeries> g(static_cast<std::size_t>(reach + 1));
    for (int n = 0; n <= reach; ++n) {
      LaurentSeries acc;
      for (int m = 0; m <= n; ++m) acc += mul(f[static_cast<std::size_t>(m)], rq(n - m, order), order);
      g[static_cast<std::size_t>(n)] = mul(acc, mono(n * n + linear(j) * n), order);
    }
    f = std::move(g);
  }
  LaurentSeries total;
  for (const LaurentSeries& x : f) total += x;
  return total.truncated(order);
}

}  // namespace detail

// ---------------------------------------------------------------- A1 family

// sum_r q^{(6r+1)r}[2L; L-2r] - q^{(2r+1)(3r+1)}[2L; L-2r-1] = (q)_{2L}/(q)_L
inline Sides euler_sides(const Params& p, int) {
  const int L = arg(p, "L");
  LaurentSeries lhs;
  for (int r = -L; r <= L; ++r) {
    lhs += qbin_shift(2 * L, L - 2 * r, (6 * r + 1) * r);
    lhs -= qbin_shift(2 * L, L - 2 * r - 1, (2 * r + 1) * (3 * r + 1));
  }
  return {lhs, detail::qpoch_ratio(2 * L, L)};
}

// sum_r q^{(6r+1)r}(1 - q^{4r+1}) / ((q)_{L-2r}(q)_{L+2r+1}) = 1/(q)_L, both
// sides multiplied by (q)_{2L+1}
inline Sides euler2_sides(const Params& p, int) {
  const int L = arg(p, "L");
  LaurentSeries lhs;
  for (int r = -L; r <= L; ++r) {
    const LaurentSeries& b = qbinomial(2 * L + 1, L - 2 * r);
    if (b.is_zero()) continue;
    lhs += (b * one_minus_q(4 * r + 1)).shifted((6 * r + 1) * r);
  }
  return {lhs, detail::qpoch_ratio(2 * L + 1, L)};
}

// sum_r (-1)^r q^{((2k+1)r-1)r/2 + ell k r} / ((q)_{L-r}(q)_{L+r+ell})
//   = sum a^{n1+...+n_{k-1}} q^{n1^2+...+n_{k-1}^2} / ((q)_{L-n1}(q)_{n1-n2}...(q)_{n_{k-1}}),
// a = q^ell, both sides multiplied by (q)_{2L+ell}
inline Sides agfinite_sides(const Params& p, int) {
  const int k = arg(p, "k"), ell = arg(p, "ell"), L = arg(p, "L");
  LaurentSeries lhs;
  for (int r = -L - ell; r <= L; ++r) {
    const int twice = ((2 * k + 1) * r - 1) * r;
    lhs += qbin_shift(2 * L + ell, L - r, twice / 2 + ell * k * r).scaled(Integer(sign_of(r)));
  }
  const LaurentSeries sum = detail::binomial_chain(k - 1, L, [&](int) { return ell; });
  return {lhs, sum * detail::qpoch_ratio(2 * L + ell, L)};
}

// sum q^{N1^2+...+N_{k-1}^2 + N_i+...+N_{k-1}} / ((q)_{n1}...(q)_{n_{k-1}})
//   = (q^i, q^{2k-i+1}, q^{2k+1}; q^{2k+1})_oo / (q)_oo
inline Sides ag3_series(int k, int i, int order) {
  const LaurentSeries lhs =
      detail::series_chain(k - 1, [&](int j) { return chi(j >= i); }, [&](int n) { return rq(n, order); }, order);
  const int K = 2 * k + 1;
  return {lhs, product_side({i, K - i, K}, K, 1, order)};
}

inline Sides ag1_sides(const Params& p, int order) {
  const int k = arg(p, "k");
  return ag3_series(k, k, order);
}

inline Sides ag2_sides(const Params& p, int order) { return ag3_series(arg(p, "k"), 1, order); }

inline Sides ag3_sides(const Params& p, int order) { return ag3_series(arg(p, "k"), arg(p, "i"), order); }

// The same chain closed by 1/(q^2;q^2)_{N_{k-1}}:
//   = (q^i, q^{2k-i}, q^{2k}; q^{2k})_oo / (q)_oo
inline Sides bressoud_sides(const Params& p, int order) {
  const int k = arg(p, "k"), i = arg(p, "i");
  const LaurentSeries lhs = detail::series_chain(
      k - 1, [&](int j) { return chi(j >= i); }, [&](int n) { return reciprocal_dilated_qpoch(2, n, order); },
      order);
  const int K = 2 * k;
  return {lhs, product_side({i, K - i, K}, K, 1, order)};
}

inline Sides rr_series(int linear, const std::vector<int>& residues, int order) {
  LaurentSeries lhs;
  for (int n = 0; n * n + linear * n <= order; ++n) lhs += mul(mono(n * n + linear * n), rq(n, order), order);
  return {lhs.truncated(order), reciprocal_product(residues, 5, order)};
}

inline Sides rr1_sides(const Params&, int order) { return rr_series(0, {1, 4}, order); }
inline Sides rr2_sides(const Params&, int order) { return rr_series(1, {2, 3}, order); }

inline Sides alt_sides(const Params& p, int) {
  auto [lhs, rhs] = alt_identity_sides(arg(p, "L"), arg(p, "ell"));
  return {std::move(lhs), std::move(rhs)};
}

// sum_r (-1)^{k+m} q^{binom(m,2) - mh + k(k+1)/2 + k(b-2h)} [M-k-m; b-m][a; m][a-m; k]
//   (q^{h-k-m+1})_{a-2h}/(q)_{a-2h} = [M; b] delta_{h,0}
inline Sides id_lemma_sides(const Params& p, int) {
  const int M = arg(p, "M"), b = arg(p, "b"), a = arg(p, "a"), h = arg(p, "h");
  LaurentSeries lhs;
  for (int k = 0; k <= a; ++k)
    for (int m = 0; k + m <= a; ++m) {
      const LaurentSeries& b1 = qbinomial(M - k - m, b - m);
      if (b1.is_zero()) continue;
      LaurentSeries t = b1 * qbinomial(a, m) * qbinomial(a - m, k);
      t = t * qratio(h - k - m + 1, a - 2 * h);
      if (t.is_zero()) continue;
      const int e = m * (m - 1) / 2 - m * h + k * (k + 1) / 2 + k * (b - 2 * h);
      lhs += t.shifted(e).scaled(Integer(sign_of(k + m)));
    }
  return {lhs, h == 0 ? qbinomial(M, b) : LaurentSeries::zero()};
}

// ---------------------------------------------------------- supernomial family

// sum_k sum_sigma eps(sigma) q^{sum_s (3k_s - 2 sigma_s) k_s / 2}
//   S(A, B; L2-3k1+sigma1-1+ell, L2-3k2+sigma2-2, L2-3k3+sigma3-3)
//   = (q)_ell q^{L1^2 - L1 L2 + L2^2 + ell L1} / ((q^{-ell})_{-L1} (q)_{-L2}),
// A = 2L1 - L2 + ell, B = 2L2 - L1
inline Sides superid_sides(const Params& p, int) {
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2"), ell = arg(p, "ell");
  const int A = 2 * L1 - L2 + ell, B = 2 * L2 - L1;
  const int reach = (std::abs(L2) + ell + A + B) / 3 + 2;
  LaurentSeries lhs;
  for (int k1 = -reach; k1 <= reach; ++k1)
    for (int k2 = -reach; k2 <= reach; ++k2) {
      const Triple k = detail::triple_of(k1, k2);
      for (const SignedPermutation& s : symmetric_group3()) {
        const int l1 = L2 - 3 * k[0] + s(1) - 1 + ell;
        const int l2 = L2 - 3 * k[1] + s(2) - 2;
        const int l3 = L2 - 3 * k[2] + s(3) - 3;
        const LaurentSeries& sn = supernomial(A, B, l1, l2, l3);
        if (sn.is_zero()) continue;
        int twice = 0;
        for (int t = 1; t <= 3; ++t) twice += (3 * detail::at(k, t) - 2 * s(t)) * detail::at(k, t);
        lhs += sn.shifted(twice / 2).scaled(Integer(s.sign));
      }
    }
  const RationalFunction rhs = RationalFunction(qpoch(ell)) * RationalFunction::reciprocal_poch(qpow(-ell), -L1) *
                               RationalFunction::reciprocal_qpoch(-L2);
  return {lhs, detail::polynomial_of(rhs, "superid right-hand side").shifted(L1 * L1 - L1 * L2 + L2 * L2 + ell * L1)};
}

// The superid summand restricted to t = 3k1 + 1 - sigma1 fixed:
//   = (-1)^t q^{t(t+1)/2 + (L-a)(L-a+t)} [3L-a+ell; 2L-a+t],
// supernomial arguments A = 3L - 2a + ell, B = a.
inline Sides strong_sides(const Params& p, int) {
  const int L = arg(p, "L"), a = arg(p, "a"), ell = arg(p, "ell"), t = arg(p, "t");
  const int A = 3 * L - 2 * a + ell, B = a;
  const int reach = A + B + 6;
  LaurentSeries lhs;
  for (const SignedPermutation& s : symmetric_group3()) {
    if (detail::mod3(t - 1 + s(1)) != 0) continue;
    const int k1 = (t - 1 + s(1)) / 3;
    for (int k2 = -reach; k2 <= reach; ++k2) {
      const Triple k = detail::triple_of(k1, k2);
      const int l1 = L - 3 * k[0] + s(1) - 1 + ell;
      const int l2 = L - 3 * k[1] + s(2) - 2;
      const int l3 = L - 3 * k[2] + s(3) - 3;
      const LaurentSeries& sn = supernomial(A, B, l1, l2, l3);
      if (sn.is_zero()) continue;
      int twice = 0;
      for (int u = 1; u <= 3; ++u) twice += (3 * detail::at(k, u) - 2 * s(u)) * detail::at(k, u);
      lhs += sn.shifted(twice / 2).scaled(Integer(s.sign));
    }
  }
  const int twice_t = t * (t + 1);
  const LaurentSeries rhs =
      qbin_shift(3 * L - a + ell, 2 * L - a + t, twice_t / 2 + (L - a) * (L - a + t)).scaled(Integer(sign_of(t)));
  return {lhs, rhs};
}

inline Sides gde_equiv_sides(const Params& p, int) {
  const GdeKind kind = gde_kind(arg(p, "kind"));
  const int N = arg(p, "N"), M = arg(p, "M");
  return {gde_defining(kind, N, M), gde_alternative(kind, N, M)};
}

inline Sides gde_sym_sides(const Params& p, int) {
  const GdeSides s = gde_symmetry(gde_kind(arg(p, "kind")), arg(p, "N"), arg(p, "M"));
  return {s.lhs, s.rhs};
}

inline Sides gde_rec_sides(const Params& p, int) {
  const GdeRoute route = arg(p, "route") == 0 ? GdeRoute::defining : GdeRoute::alternative;
  const GdeSides s = gde_recurrence(arg(p, "rec"), arg(p, "N"), arg(p, "M"), route);
  return {s.lhs, s.rhs};
}

inline Sides kratt_sides(const Params& p, int) {
  const int n = arg(p, "n");
  std::vector<int> B{arg(p, "B1"), arg(p, "B2")};
  if (n == 3) B.push_back(arg(p, "B3"));
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {kratt_determinant(B, L1, L2, DeterminantMode::direct), kratt_determinant(B, L1, L2, DeterminantMode::product)};
}

// ------------------------------------------------------------- finite A2 sums

// sum_k sum_sigma eps q^{3 sum k^2/2 + sum (3k_s - sigma_s + s)^2/2 - sum sigma_s k_s}
//   prod_s [L; L1 + 3k_s - sigma_s + s] = [L1+L2; L1]
inline LaurentSeries a2euler_lhs(int L1, int L2) {
  const int L = L1 + L2;
  const int reach = L / 3 + 2;
  LaurentSeries total;
  for (int k1 = -reach; k1 <= reach; ++k1)
    for (int k2 = -reach; k2 <= reach; ++k2) {
      const Triple k = detail::triple_of(k1, k2);
      for (const SignedPermutation& s : symmetric_group3()) {
        LaurentSeries t = LaurentSeries::one();
        int twice = 3 * square_sum(k);
        for (int u = 1; u <= 3 && !t.is_zero(); ++u) {
          const int x = 3 * detail::at(k, u) - s(u) + u;
          twice += x * x - 2 * s(u) * detail::at(k, u);
          t = t * qbinomial(L, L1 + x);
        }
        if (t.is_zero()) continue;
        total += t.shifted(twice / 2).scaled(Integer(s.sign));
      }
    }
  return total;
}

inline Sides a2euler_sides(const Params& p, int) {
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {a2euler_lhs(L1, L2), qbinomial(L1 + L2, L1)};
}

// q^{6 sum k^2 + 4(k1+2k2+3k3)} det q^{t(t-s-3k_s)} [L; L1-3k_s+t-s]
inline Sides detform_sides(const Params& p, int) {
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2"), L = L1 + L2;
  const LaurentSeries lhs = determinant_sum(
      [](const Triple& k) { return 6 * square_sum(k) + 4 * weighted_sum(k); },
      [&](const Triple& k, int s, int t) {
        const int ks = detail::at(k, s);
        return qbin_shift(L, L1 - 3 * ks + t - s, t * (t - s - 3 * ks));
      },
      L + 3);
  return {lhs, a2euler_lhs(L1, L2)};
}

// q^{c lq(k)} det q^{i t(t-s-3k_s)} [L; L1-3k_s+t-s],  c = 3k+1 (or 3k-1 with
// [L; L1+3k_s+s-t] for the dual)
inline LaurentSeries finite_det_lhs(int k, int i, int L1, int L2, bool dual) {
  const int L = L1 + L2;
  const int c = dual ? 3 * k - 1 : 3 * k + 1;
  return determinant_sum([&](const Triple& kk) { return c * linear_quadratic(kk); },
                         [&](const Triple& kk, int s, int t) {
                           const int ks = detail::at(kk, s);
                           const int m = dual ? L1 + 3 * ks + s - t : L1 - 3 * ks + t - s;
                           return qbin_shift(L, m, i * t * (t - s - 3 * ks));
                         },
                         L + 3);
}

// (q)_L^2 sum over the k-1 level chain of
//   prod_j q^{C(r^{(j)}) + [j >= i] |r^{(j)}|} (1 - q^{|r^{(i-1)}|+1})
//   / ((q)_{r1}(q)_{r2}(q)_{|r|+1}) at the innermost level
inline LaurentSeries finite_chain_rhs(int k, int i, int L1, int L2, bool dual, int order,
                                      const FinalWeight& fin) {
  const int L = L1 + L2;
  const LaurentSeries pre = qpoch(L) * qpoch(L);
  if (k == 1) return mul({pre, one_minus_q(L + 1), fin({L1, L2}), mono(dual ? 2 * L1 * L2 : 0)}, order);
  auto weight = [&](int j, const Index2& r) {
    int e = cartan_half(r) + (j >= i ? r.first + r.second : 0);
    if (dual && j == k - 1) e += 2 * r.first * r.second;
    LaurentSeries w = mono(e);
    if (j == i - 1) w = w * one_minus_q(r.first + r.second + 1);
    return w;
  };
  const Box box = [&](int) { return rectangle(0, L1, 0, L2); };
  LaurentSeries res = chain_sum(k - 1, weight, fin, Index2{L1, L2}, box, order);
  if (i == 1) res = mul(res, one_minus_q(L + 1), order);
  return mul(pre, res, order);
}

inline FinalWeight finite5_final(int order) {
  return [order](const Index2& r) {
    return mul({rq(r.first, order), rq(r.second, order), rq(r.first + r.second + 1, order)}, order);
  };
}

inline Sides finite5_sides(const Params& p, int order) {
  const int k = arg(p, "k"), i = arg(p, "i"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {finite_det_lhs(k, i, L1, L2, false), finite_chain_rhs(k, i, L1, L2, false, order, finite5_final(order))};
}

inline Sides finite6_sides(const Params& p, int order) {
  const int k = arg(p, "k"), i = arg(p, "i"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {finite_det_lhs(k, i, L1, L2, true), finite_chain_rhs(k, i, L1, L2, true, order, finite5_final(order))};
}

// q^{c lq(k)} det q^{k(t + ell chi(t>1))(t-s-3k_s)} [L+ell; L1-3k_s+t-s+ell chi(t>1)]
inline LaurentSeries genell_lhs(int k, int ell, int L1, int L2, bool dual) {
  const int L = L1 + L2;
  const int c = dual ? 3 * k - 1 : 3 * k + 1;
  return determinant_sum([&](const Triple& kk) { return c * linear_quadratic(kk); },
                         [&](const Triple& kk, int s, int t) {
                           const int ks = detail::at(kk, s);
                           const int x = ell * chi(t > 1);
                           return qbin_shift(L + ell, L1 - 3 * ks + t - s + x, k * (t + x) * (t - s - 3 * ks));
                         },
                         L + ell + 3);
}

// (q)_{L+ell}^2 (q)_ell times the k-level chain whose innermost level carries
//   q^{2(C(r) + ell r1)} / ((q)_{2r1-r2+ell}(q)_{2r2-r1}(q^{-ell})_{-r1}(q)_{-r2})
// over Cr + ell e1 >= 0, and whose level k-1 carries 1/(q)_{|r|+ell}.
inline LaurentSeries genell_rhs(int k, int ell, int L1, int L2, int order) {
  const int L = L1 + L2;
  const LaurentSeries pre = qpoch(L + ell) * qpoch(L + ell) * qpoch(ell);
  const int lo = -ell - 2;
  const Box box = [&](int j) {
    std::vector<Index2> out;
    for (const Index2& r : rectangle(lo, L1, lo, L2)) {
      if (j == k && (2 * r.first - r.second + ell < 0 || 2 * r.second - r.first < 0)) continue;
      out.push_back(r);
    }
    return out;
  };
  auto weight = [&](int j, const Index2& r) {
    LaurentSeries w = mono((j == k ? 2 : 1) * (cartan_half(r) + ell * r.first));
    if (j == k - 1) w = mul(w, rq(r.first + r.second + ell, order), order);
    return w;
  };
  const FinalWeight fin = [&](const Index2& r) {
    return mul({rq(2 * r.first - r.second + ell, order), rq(2 * r.second - r.first, order),
                reciprocal_poch(qpow(-ell), -r.first, order), rq(-r.second, order)},
               order);
  };
  LaurentSeries res = chain_sum(k, weight, fin, Index2{L1, L2}, box, order);
  if (k == 1) res = mul(res, rq(L + ell, order), order);
  return mul(pre, res, order);
}

inline Sides genell_sides(const Params& p, int order) {
  const int k = arg(p, "k"), ell = arg(p, "ell"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {genell_lhs(k, ell, L1, L2, false), genell_rhs(k, ell, L1, L2, order)};
}

// The dual right-hand side: the level-k sum is carried out in closed form and
// leaves a kernel between levels k-1 and k.
inline LaurentSeries genelldual_rhs(int k, int ell, int L1, int L2, int order) {
  const int L = L1 + L2;
  const LaurentSeries pre = (qpoch(L + ell) * qpoch(L + ell)).scaled(Integer(sign_of(ell)));
  const int lo = -ell - 2;
  std::vector<Index2> last;
  for (const Index2& r : rectangle(lo, L1, lo, L2))
    if (2 * r.first - r.second + ell >= 0 && 2 * r.second - r.first >= 0) last.push_back(r);
  auto last_weight = [&](const Index2& r) -> LaurentSeries {
    const PochValue a = poch(qpow(1), Count(r.first + ell), order);
    const PochValue b = poch(qpow(0), Count(r.second), order);
    if (a.kind == PochKind::zero || b.kind == PochKind::zero) return LaurentSeries::zero();
    if (a.kind == PochKind::infinite || b.kind == PochKind::infinite)
      throw PoleError("genelldual innermost weight has a pole");
    return mul({mono(cartan_half(r) + ell * r.first), a.value, b.value, rq(2 * r.first - r.second + ell, order),
                rq(2 * r.second - r.first, order)},
               order);
  };
  std::map<Index2, LaurentSeries> lw;
  for (const Index2& r : last) {
    LaurentSeries x = last_weight(r);
    if (!vanishes(x)) lw.emplace(r, std::move(x));
  }
  auto cross = [&](const Index2& P, const Index2& r) {
    return 3 * P.first * P.second + ell * (P.second - r.first - r.second) - (P.first + r.second) * (P.second + r.first) -
           ell * (ell + 1) / 2;
  };
  auto g_km1 = [&](const Index2& P) {
    LaurentSeries acc;
    for (const auto& [r, x] : lw) {
      if (r.first > P.first || r.second > P.second) continue;
      acc += mul({x, mono(cross(P, r)), rq(P.first - r.first, order), rq(P.second - r.second, order)}, order);
    }
    return mul(acc, rq(P.first + P.second + ell, order), order);
  };
  if (k == 1) return mul(pre, g_km1({L1, L2}), order);
  std::map<Index2, LaurentSeries> g;
  for (const Index2& P : rectangle(lo, L1, lo, L2)) {
    LaurentSeries x = g_km1(P);
    if (vanishes(x)) continue;
    g.emplace(P, mul(x, mono(cartan_half(P) + ell * P.first), order));
  }
  for (int j = k - 2; j >= 1; --j) {
    std::map<Index2, LaurentSeries> next;
    for (const Index2& v : rectangle(lo, L1, lo, L2)) {
      LaurentSeries acc;
      for (const auto& [u, x] : g) {
        if (u.first > v.first || u.second > v.second) continue;
        acc += mul({x, rq(v.first - u.first, order), rq(v.second - u.second, order)}, order);
      }
      if (vanishes(acc)) continue;
      next.emplace(v, mul(acc, mono(cartan_half(v) + ell * v.first), order));
    }
    g = std::move(next);
  }
  LaurentSeries acc;
  for (const auto& [u, x] : g) acc += mul({x, rq(L1 - u.first, order), rq(L2 - u.second, order)}, order);
  return mul(pre, acc, order);
}

inline Sides genelldual_sides(const Params& p, int order) {
  const int k = arg(p, "k"), ell = arg(p, "ell"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {genell_lhs(k, ell, L1, L2, true), genelldual_rhs(k, ell, L1, L2, order)};
}

// ell = 0, 1: (q)_{L+ell}^2 times the k-1 level chain with weights
// q^{C(r) + ell r1} and innermost 1/((q)_{r1}(q)_{r2}(q)_{|r|+ell})
inline LaurentSeries ell01_rhs(int k, int ell, int L1, int L2, bool dual, int order) {
  const int L = L1 + L2;
  const LaurentSeries pre = qpoch(L + ell) * qpoch(L + ell);
  LaurentSeries res;
  if (k == 1) {
    res = mul({rq(L1, order), rq(L2, order), rq(L + ell, order)}, order);
    if (dual) res = res.shifted(2 * L1 * L2 + ell * L2);
  } else {
    auto weight = [&](int j, const Index2& r) {
      int e = cartan_half(r) + ell * r.first;
      if (dual && j == k - 1) e += 2 * r.first * r.second + ell * r.second;
      return mono(e);
    };
    const FinalWeight fin = [&](const Index2& r) {
      return mul({rq(r.first, order), rq(r.second, order), rq(r.first + r.second + ell, order)}, order);
    };
    const Box box = [&](int) { return rectangle(0, L1, 0, L2); };
    res = chain_sum(k - 1, weight, fin, Index2{L1, L2}, box, order);
  }
  if (dual) res = res.shifted(-ell).scaled(Integer(sign_of(ell)));
  return mul(pre, res, order);
}

inline Sides ell01_sides(const Params& p, int order) {
  const int k = arg(p, "k"), ell = arg(p, "ell"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {genell_lhs(k, ell, L1, L2, false), ell01_rhs(k, ell, L1, L2, false, order)};
}

inline Sides ell01dual_sides(const Params& p, int order) {
  const int k = arg(p, "k"), ell = arg(p, "ell"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {genell_lhs(k, ell, L1, L2, true), ell01_rhs(k, ell, L1, L2, true, order)};
}

// ell = 2 after the shift L1 -> L1 + 1: -q^{1-k} (q)_{L+2}^2 times the k-1 level
// chain with weights q^{C(r) + r2} (and q^{r1} at level k-1); the dual carries
// q^{2 r1 r2} at level k-1 and q^{-2-k} in front.
inline LaurentSeries ell2_rhs(int k, int L1, int L2, bool dual, int order) {
  const int L = L1 + L2;
  const LaurentSeries pre = qpoch(L + 2) * qpoch(L + 2);
  auto weight = [&](int j, const Index2& r) {
    int e = cartan_half(r) + r.second;
    if (j == k - 1) e += dual ? 2 * r.first * r.second : r.first;
    return mono(e);
  };
  const FinalWeight fin = [&](const Index2& r) {
    return mul({rq(r.first, order), rq(r.second, order), rq(r.first + r.second + 1, order)}, order);
  };
  const Box box = [&](int) { return rectangle(0, L1 + 1, 0, L2); };
  const LaurentSeries res = chain_sum(k - 1, weight, fin, Index2{L1 + 1, L2}, box, order);
  if (dual) return mul(pre, res, order).shifted(-2 - k);
  return -mul(pre, res, order).shifted(1 - k);
}

inline Sides ell2_sides(const Params& p, int order) {
  const int k = arg(p, "k"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {genell_lhs(k, 2, L1, L2, false), ell2_rhs(k, L1, L2, false, order)};
}

inline Sides ell2dual_sides(const Params& p, int order) {
  const int k = arg(p, "k"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {genell_lhs(k, 2, L1, L2, true), ell2_rhs(k, L1, L2, true, order)};
}

// ------------------------------------------------------ infinite A2 identities

inline Box series_box(int order) {
  return [order](int) { return quadratic_box(order); };
}

inline LaurentSeries aga2_lhs(int k, int i, bool dual, int order) {
  auto weight = [&](int j, const Index2& r) {
    int e = cartan_half(r) + (j >= i ? r.first + r.second : 0);
    if (dual && j == k - 1) e += 2 * r.first * r.second;
    LaurentSeries w = mono(e);
    if (j == i - 1) w = w * one_minus_q(r.first + r.second + 1);
    return w;
  };
  return chain_sum(k - 1, weight, finite5_final(order), std::nullopt, series_box(order), order).truncated(order);
}

inline std::vector<int> aga2_exponents(int K, int i) { return {i, i, 2 * i, K - 2 * i, K - i, K - i, K, K}; }

inline std::vector<int> aga2b_exponents(int k, int sigma, bool dual) {
  if (dual) return {1, k - sigma, k + 1 - sigma, 2 * k - 2 + sigma, 2 * k - 1 + sigma, 3 * k - 2, 3 * k - 1, 3 * k - 1};
  return {1, k - sigma, k + 1 - sigma, 2 * k + sigma, 2 * k + 1 + sigma, 3 * k, 3 * k + 1, 3 * k + 1};
}

inline Sides aga2_family(int k, int i, bool dual, int order) {
  const int K = dual ? 3 * k - 1 : 3 * k + 1;
  return {aga2_lhs(k, i, dual, order), product_side(aga2_exponents(K, i), K, 3, order)};
}

inline LaurentSeries aga2b_lhs(int k, int sigma, bool dual, int order) {
  auto weight = [&](int j, const Index2& r) {
    int e = cartan_half(r) + r.first;
    if (j == k - 1) e += sigma * r.second + (dual ? 2 * r.first * r.second : 0);
    return mono(e);
  };
  return chain_sum(k - 1, weight, finite5_final(order), std::nullopt, series_box(order), order).truncated(order);
}

inline Sides aga2b_family(int k, int sigma, bool dual, int order) {
  const int K = dual ? 3 * k - 1 : 3 * k + 1;
  return {aga2b_lhs(k, sigma, dual, order), product_side(aga2b_exponents(k, sigma, dual), K, 3, order)};
}

inline Sides aga2_sides(const Params& p, int order) { return aga2_family(arg(p, "k"), arg(p, "i"), false, order); }
inline Sides aga2c_sides(const Params& p, int order) { return aga2_family(arg(p, "k"), arg(p, "i"), true, order); }
inline Sides aga2b_sides(const Params& p, int order) {
  return aga2b_family(arg(p, "k"), arg(p, "sigma"), false, order);
}
inline Sides aga2d_sides(const Params& p, int order) {
  return aga2b_family(arg(p, "k"), arg(p, "sigma"), true, order);
}

// sum_{r1,r2} q^{C(r) + linear} [2r1 + top; r2] / (q)_{r1}
inline LaurentSeries a2rr_sum(int l1, int l2, int top, int order) {
  LaurentSeries total;
  for (const Index2& r : quadratic_box(order)) {
    const LaurentSeries& b = qbinomial(2 * r.first + top, r.second);
    if (b.is_zero()) continue;
    total += mul(b.shifted(cartan_half(r) + l1 * r.first + l2 * r.second), rq(r.first, order), order);
  }
  return total.truncated(order);
}

inline Sides a2rr1_sides(const Params&, int order) {
  return {a2rr_sum(0, 0, 0, order), reciprocal_product({1, 1, 3, 4, 6, 6}, 7, order)};
}

inline Sides a2rr2_sides(const Params&, int order) {
  return {a2rr_sum(1, 1, 0, order), reciprocal_product({2, 3, 3, 4, 4, 5}, 7, order)};
}

// form 0: first sum = product, 1: second sum = product, 2: first sum = second sum
inline Sides a2rr3_sides(const Params& p, int order) {
  const int form = arg(p, "form");
  const LaurentSeries a = a2rr_sum(1, 0, 1, order);
  const LaurentSeries b = a2rr_sum(0, 1, 0, order);
  if (form == 2) return {a, b};
  return {form == 0 ? a : b, reciprocal_product({1, 2, 3, 4, 5, 6}, 7, order)};
}

// (q)_oo times the right-hand side of an AGA2 family entry against the
// W_3 character product with the matching composition
inline Sides char_match_sides(const Params& p, int order) {
  const int family = arg(p, "family"), k = arg(p, "k"), j = arg(p, "j");
  const bool dual = family == 2 || family == 3;
  const int K = dual ? 3 * k - 1 : 3 * k + 1;
  std::vector<int> exps;
  std::vector<int> comp;
  if (family == 0 || family == 2) {
    exps = aga2_exponents(K, j);
    comp = {j, j, K - 2 * j};
  } else {
    exps = aga2b_exponents(k, j, dual);
    comp = {1, k - j, dual ? 2 * k - 2 + j : 2 * k + j};
  }
  return {product_side(exps, K, 2, order), character_product(CharacterSpec{3, K, comp}, order)};
}

// ---------------------------------------------------- Rogers-Ramanujan finite

// sum_x q^{x(x+sigma)} (q)_{L+extra} / ((q)_{L1-x}(q)_{L2-x}(q)_x)
inline LaurentSeries rra_rhs(int L1, int L2, int sigma, int extra, int order) {
  const int L = L1 + L2;
  LaurentSeries total;
  for (int x = 0; x <= std::min(L1, L2); ++x)
    total += mul({mono(x * (x + sigma)), rq(L1 - x, order), rq(L2 - x, order), rq(x, order)}, order);
  return mul(qpoch(L + extra), total, order);
}

inline LaurentSeries rra2rep_lhs(int sigma, int L1, int L2) {
  const int L = L1 + L2;
  return determinant_sum([](const Triple& k) { return 15 * square_sum(k) / 2 + 5 * weighted_sum(k); },
                         [&](const Triple& k, int s, int t) {
                           const int ks = detail::at(k, s);
                           return qbin_shift(L, L1 - 3 * ks + t - s, (2 - sigma) * t * (t - s - 3 * ks));
                         },
                         L + 3);
}

inline Sides rra2rep_sides(const Params& p, int order) {
  const int sigma = arg(p, "sigma"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {rra2rep_lhs(sigma, L1, L2), rra_rhs(L1, L2, sigma, 0, order)};
}

inline Sides rra2repb_sides(const Params& p, int order) {
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2"), L = L1 + L2;
  const LaurentSeries lhs = -determinant_sum(
      [](const Triple& k) { return 15 * square_sum(k) / 2 + 5 * weighted_sum(k) + 1; },
      [&](const Triple& k, int s, int t) {
        const int ks = detail::at(k, s);
        const int x = chi(t > 1);
        return qbin_shift(L + 1, L1 - 3 * ks + t - s + x, 2 * (t + x) * (t - s - 3 * ks));
      },
      L + 4);
  return {lhs, rra_rhs(L1, L2, 1, 1, order)};
}

inline LaurentSeries rra1rep_lhs(int sigma, int L1, int L2) {
  const int L = L1 + L2;
  LaurentSeries total;
  for (int j = -L; j <= L; ++j) {
    const LaurentSeries& a = qbinomial(L, L1 - j);
    if (a.is_zero()) continue;
    total += (a * qbinomial(L, L2 - j)).shifted(j * (5 * j + 2 * sigma + 1) / 2).scaled(Integer(sign_of(j)));
  }
  return total;
}

inline Sides rra1rep_sides(const Params& p, int order) {
  const int sigma = arg(p, "sigma"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {rra1rep_lhs(sigma, L1, L2), rra_rhs(L1, L2, sigma, 0, order)};
}

inline Sides rra1repb_sides(const Params& p, int order) {
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2"), L = L1 + L2;
  LaurentSeries lhs;
  for (int j = -L - 1; j <= L + 1; ++j) {
    const LaurentSeries& a = qbinomial(L + 1, L1 - j);
    if (a.is_zero()) continue;
    lhs += (a * qbinomial(L + 1, L2 - j)).shifted(j * (5 * j + 3) / 2).scaled(Integer(sign_of(j)));
  }
  return {lhs, rra_rhs(L1, L2, 1, 1, order)};
}

inline Sides rra_equal_sides(const Params& p, int) {
  const int sigma = arg(p, "sigma"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  return {rra1rep_lhs(sigma, L1, L2), rra2rep_lhs(sigma, L1, L2)};
}

// -------------------------------------------------------------- M(3,3k) family

inline Sides gk_seed_sides(const Params& p, int) {
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2"), L = L1 + L2;
  const LaurentSeries lhs = determinant_sum([](const Triple& k) { return 3 * linear_quadratic(k); },
                                            [&](const Triple& k, int s, int t) {
                                              const int ks = detail::at(k, s);
                                              return qbin_shift(L, L1 + 3 * ks + s - t, t * (t - s - 3 * ks));
                                            },
                                            L + 3);
  return {lhs, qbinomial(L, L1).dilated(3)};
}

inline FinalWeight m33k_final(int order) {
  return [order](const Index2& r) {
    const int n = r.first + r.second;
    if (r.first < 0 || r.second < 0) return LaurentSeries::zero();
    return mul({qbinomial(n, r.first).dilated(3), rq(n + 1, order), rq(n, order)}, order);
  };
}

inline Sides m33k_finite_sides(const Params& p, int order) {
  const int k = arg(p, "k"), i = arg(p, "i"), L1 = arg(p, "L1"), L2 = arg(p, "L2"), L = L1 + L2;
  const LaurentSeries lhs = determinant_sum([&](const Triple& kk) { return 3 * k * linear_quadratic(kk); },
                                            [&](const Triple& kk, int s, int t) {
                                              const int ks = detail::at(kk, s);
                                              return qbin_shift(L, L1 + 3 * ks + s - t, i * t * (t - s - 3 * ks));
                                            },
                                            L + 3);
  return {lhs, finite_chain_rhs(k, i, L1, L2, false, order, m33k_final(order))};
}

inline Sides m33k_sides(const Params& p, int order) {
  const int k = arg(p, "k"), i = arg(p, "i");
  auto weight = [&](int j, const Index2& r) {
    LaurentSeries w = mono(cartan_half(r) + (j >= i ? r.first + r.second : 0));
    if (j == i - 1) w = w * one_minus_q(r.first + r.second + 1);
    return w;
  };
  const LaurentSeries lhs =
      chain_sum(k - 1, weight, m33k_final(order), std::nullopt, series_box(order), order).truncated(order);
  const int K = 3 * k;
  return {lhs, product_side(aga2_exponents(K, i), K, 3, order)};
}

// ------------------------------------------------------------- Kostka family

// K_{lambda' mu} with mu = (2^{b} 1^{a}), a = 2r1 - r2, b = 2r2 - r1 and
// lambda = (r2 + kk_1, r2 + kk_2, r2 + kk_3); zero off the admissible range.
inline LaurentSeries kostka_weight(const Index2& r, const Triple& kk) {
  const int a = 2 * r.first - r.second, b = 2 * r.second - r.first;
  if (a < 0 || b < 0) return LaurentSeries::zero();
  std::vector<int> parts;
  for (int s = 0; s < 3; ++s) {
    const int x = r.second + kk[static_cast<std::size_t>(s)];
    if (x < 0) return LaurentSeries::zero();
    parts.push_back(x);
  }
  return kostka_from_supernomial(Partition(parts), a, b);
}

inline LaurentSeries itk_chain(int k, int i, const Triple& kk, std::optional<Index2> L, const Box& box, int order) {
  auto weight = [&](int j, const Index2& r) {
    const int n = r.first + r.second;
    LaurentSeries w = mono(cartan_half(r) + (j >= i && j <= k - 1 ? n : 0));
    if (j == i - 1) w = w * one_minus_q(n + 1);
    if (j == k - 1) w = mul(w, rq(n + 1, order), order);
    return w;
  };
  const FinalWeight fin = [&](const Index2& r) {
    const LaurentSeries kw = kostka_weight(r, kk);
    if (kw.is_zero()) return LaurentSeries::zero();
    return mul({kw, rq(2 * r.first - r.second, order), rq(2 * r.second - r.first, order)}, order);
  };
  return chain_sum(k, weight, fin, L, box, order);
}

inline Sides itk_sides(const Params& p, int order) {
  const int k = arg(p, "k"), i = arg(p, "i"), L1 = arg(p, "L1"), L2 = arg(p, "L2");
  const Triple kk = detail::triple_of(arg(p, "k1"), arg(p, "k2"));
  const int L = L1 + L2;
  const Box box = [&](int) { return rectangle(0, L, 0, L); };
  LaurentSeries res = itk_chain(k, i, kk, Index2{L1, L2}, box, order);
  if (k == 1) res = mul(res, rq(L + 1, order), order);
  if (i == 1) res = mul(res, one_minus_q(L + 1), order);
  const LaurentSeries lhs = mul(qpoch(L) * qpoch(L), res, order);
  Matrix3 m;
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t) {
      const int ks = detail::at(kk, s);
      m[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)] =
          qbin_shift(L, L1 - ks + s - t, i * t * (t - s + ks));
    }
  const int e0 = k * square_sum(kk) / 2 - k * weighted_sum(kk);
  return {lhs, det3(m).shifted(e0)};
}

inline Sides kostka_final_sides(const Params& p, int order) {
  const int k = arg(p, "k"), i = arg(p, "i");
  const Triple kk = detail::triple_of(arg(p, "k1"), arg(p, "k2"));
  LaurentSeries lhs = itk_chain(k, i, kk, std::nullopt, series_box(order), order);
  if (k == 1) lhs = mul(lhs, reciprocal_qpoch_infinite(order), order);
  LaurentSeries num = LaurentSeries::one();
  for (int s = 1; s <= 3; ++s)
    for (int t = s + 1; t <= 3; ++t) num = num * one_minus_q(i * (detail::at(kk, s) - detail::at(kk, t) - s + t));
  const int e = k * square_sum(kk) / 2 - (k - i) * weighted_sum(kk);
  const LaurentSeries inv = reciprocal_qpoch_infinite(order);
  const LaurentSeries rhs = mul({num.shifted(e), inv, inv, inv}, order);
  return {lhs.truncated(order), rhs.truncated(order)};
}

// (q)_{L+2}^2/(q)_{L+1} sum_r K_{eta mu} q^{(r1^2+r1r2+r2^2)/3} / ((q)_{L1-c1}(q)_{L2-c2}(q)_{r1}(q)_{r2})
//   = q^{|lambda|^2/2} prod_{s<t}(1 - q^{lambda_s-lambda_t-s+t}) prod_s [L+2; L1-lambda_s+s]
inline Sides kostka_k1_bounded_sides(const Params& p, int order) {
  const int L1 = arg(p, "L1"), L2 = arg(p, "L2"), L = L1 + L2;
  const Triple lam = detail::triple_of(arg(p, "l1"), arg(p, "l2"));
  LaurentSeries sum;
  for (int r1 = 0; r1 <= 3 * L; ++r1)
    for (int r2 = 0; r2 <= 3 * L; ++r2) {
      if ((2 * r1 + r2) % 3 != 0 || (r1 + 2 * r2) % 3 != 0) continue;
      const int c1 = (2 * r1 + r2) / 3, c2 = (r1 + 2 * r2) / 3;
      if (c1 > L1 || c2 > L2) continue;
      const int m = r1 + 2 * r2;
      if (lam[2] + m / 3 < 0) continue;
      const Partition shifted({lam[0] + m / 3, lam[1] + m / 3, lam[2] + m / 3});
      const LaurentSeries& kq = kostka_from_supernomial(shifted, r1, r2);
      if (kq.is_zero()) continue;
      sum += mul({kq.shifted((r1 * r1 + r1 * r2 + r2 * r2) / 3), rq(L1 - c1, order), rq(L2 - c2, order),
                  rq(r1, order), rq(r2, order)},
                 order);
    }
  const LaurentSeries lhs = mul({qpoch(L + 2) * qpoch(L + 2), rq(L + 1, order), sum}, order);
  LaurentSeries rhs = weyl_numerator(lam);
  for (int s = 0; s < 3; ++s) rhs = rhs * qbinomial(L + 2, L1 - lam[static_cast<std::size_t>(s)] + s);
  return {lhs, rhs};
}

inline Sides branching_sides(const Params& p, int order) {
  const std::array<int, 3> lam{arg(p, "l1"), arg(p, "l2"), -arg(p, "l1") - arg(p, "l2")};
  return {branching_rsum(lam, order), branching_function(lam, order)};
}

}  // namespace qseries::catalog
