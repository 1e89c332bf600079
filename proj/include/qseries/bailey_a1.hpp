#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/qbinomial.hpp"
#include "qseries/rational_function.hpp"

namespace qseries {

// A Bailey pair relative to a = q^ell, realized for 0 <= L <= bound().
struct BaileyPairA1 {
  int a_exponent = 0;
  std::vector<RationalFunction> alpha;
  std::vector<RationalFunction> beta;

  int bound() const { return static_cast<int>(std::min(alpha.size(), beta.size())) - 1; }
};

// A transform parameter: s q^e, or infinity.
struct RhoParam {
  bool infinite = true;
  Monomial value{};

  static RhoParam infinity() { return {}; }
  static RhoParam monomial(int exponent, int sign = 1) { return {false, {sign, exponent}}; }
};

struct PairCheck {
  bool ok = true;
  std::optional<int> failed_at;
};

namespace detail {

// (-1)^n q^{n(n-1)/2}
inline Monomial gaussian_sign(int n) { return {n % 2 == 0 ? 1 : -1, n * (n - 1) / 2}; }

inline Monomial mono_pow(const Monomial& m, int n) {
  return {(m.sign < 0 && n % 2 != 0) ? -1 : 1, m.exponent * n};
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  return {a.sign * b.sign, a.exponent + b.exponent};
}

}  // namespace detail

// The pair alpha_L = (1 - a q^{2L})(a)_L (-1)^L q^{L(L-1)/2}/((1-a)(q)_L),
// beta_L = delta_{L,0}, for a = 1 or a = q.
inline BaileyPairA1 unit_a1_pair(int ell, int bound) {
  if (ell != 0 && ell != 1) throw DomainError("the unit Bailey pair is implemented for a = 1 and a = q");
  if (bound < 0) throw DomainError("pair bound must be nonnegative");
  BaileyPairA1 p;
  p.a_exponent = ell;
  for (int L = 0; L <= bound; ++L) {
    LaurentSeries a;
    if (ell == 0) {
      // (1 - q^{2L})(1)_L/((1-1)(q)_L) -> 1 + q^L for L >= 1, and 1 at L = 0
      a = L == 0 ? LaurentSeries::one() : LaurentSeries::one() + LaurentSeries::monomial(L);
    } else {
      std::vector<Integer> ones(static_cast<std::size_t>(2 * L + 1), Integer(1));
      a = LaurentSeries::polynomial(0, std::move(ones));
    }
    const Monomial g = detail::gaussian_sign(L);
    p.alpha.emplace_back(RationalFunction(a).times(g));
    p.beta.emplace_back(L == 0 ? RationalFunction(LaurentSeries::one()) : RationalFunction());
  }
  return p;
}

// Both sides of sum_r (-1)^r q^{r(r-1)/2} [2L+ell; L-r]
//   = q^{L(L+ell)} (q)_ell / ((q^{-ell})_{-L} (q)_{-L}),  2L + ell >= 0.
inline std::pair<LaurentSeries, LaurentSeries> alt_identity_sides(int L, int ell) {
  if (ell < 0) throw DomainError("alt identity needs ell >= 0");
  if (2 * L + ell < 0) throw DomainError("alt identity needs 2L + ell >= 0");
  LaurentSeries lhs;
  for (int r = -L - ell; r <= L; ++r) {
    const Monomial g = detail::gaussian_sign(r);
    lhs += qbinomial(2 * L + ell, L - r).shifted(g.exponent).scaled(Integer(g.sign));
  }
  const RationalFunction rhs = RationalFunction(qpoch(ell)) *
                               RationalFunction::reciprocal_poch(qpow(-ell), -L) *
                               RationalFunction::reciprocal_qpoch(-L);
  auto poly = rhs.as_polynomial();
  if (!poly) throw std::logic_error("alt identity right-hand side is not a polynomial");
  return {std::move(lhs), poly->shifted(L * (L + ell))};
}

// beta_L - sum_r alpha_r / ((q)_{L-r} (aq)_{L+r})
inline RationalFunction a1_pair_defect(const BaileyPairA1& p, int L) {
  RationalFunction rhs;
  const Monomial aq = qpow(p.a_exponent + 1);
  for (int r = 0; r <= L; ++r) {
    if (p.alpha[static_cast<std::size_t>(r)].is_zero()) continue;
    rhs += p.alpha[static_cast<std::size_t>(r)] * RationalFunction::reciprocal_qpoch(L - r) *
           RationalFunction::reciprocal_poch(aq, L + r);
  }
  return p.beta[static_cast<std::size_t>(L)] - rhs;
}

inline PairCheck verify_a1_pair(const BaileyPairA1& p, int up_to) {
  if (up_to > p.bound()) throw DomainError("pair is not realized up to the requested index");
  for (int L = 0; L <= up_to; ++L)
    if (!a1_pair_defect(p, L).is_zero()) return {false, L};
  return {};
}

// Bailey's lemma with parameters rho_1, rho_2 (monomials or infinity); both
// infinite gives alpha'_L = a^L q^{L^2} alpha_L, beta'_L = sum a^r q^{r^2} beta_r/(q)_{L-r}.
inline BaileyPairA1 transform_a1(const BaileyPairA1& p, const RhoParam& rho1, const RhoParam& rho2) {
  const int ell = p.a_exponent;
  const int bound = p.bound();
  const Monomial aq = qpow(ell + 1);
  auto aq_over = [&](const Monomial& rho) { return Monomial{rho.sign, aq.exponent - rho.exponent}; };

  // static pole check on (aq/rho_i)_L and (aq/rho_1 rho_2)_{L-r} in denominators
  for (const RhoParam* rho : {&rho1, &rho2}) {
    if (rho->infinite) continue;
    const Monomial x = aq_over(rho->value);
    for (int i = 0; i < bound; ++i) {
      const Monomial f = x.times_q(i);
      if (f.exponent == 0)
        throw PoleError("transform denominator (aq/rho;q)_L has the factor (1 " +
                        std::string(f.sign > 0 ? "-" : "+") + " q^0) for rho = " + to_string(rho->value));
    }
  }

  // per-index factor c_r = (rho1)_r (rho2)_r (aq/rho1 rho2)^r with limits applied
  auto numerator_factor = [&](int r) {
    RationalFunction c(LaurentSeries::one());
    Monomial m{1, 0};
    if (rho1.infinite && rho2.infinite) {
      m = {1, ell * r + r * r};
    } else if (rho1.infinite || rho2.infinite) {
      const Monomial rho = rho1.infinite ? rho2.value : rho1.value;
      c = RationalFunction::poch(rho, r);
      m = detail::mono_mul(detail::gaussian_sign(r), detail::mono_pow(aq_over(rho), r));
    } else {
      c = RationalFunction::poch(rho1.value, r) * RationalFunction::poch(rho2.value, r);
      const Monomial x{rho1.value.sign * rho2.value.sign, aq.exponent - rho1.value.exponent - rho2.value.exponent};
      m = detail::mono_pow(x, r);
    }
    return c.times(m);
  };
  // 1/((aq/rho1)_L (aq/rho2)_L), the finite parameters only
  auto denominator_factor = [&](int L) {
    RationalFunction d(LaurentSeries::one());
    for (const RhoParam* rho : {&rho1, &rho2})
      if (!rho->infinite) d *= RationalFunction::reciprocal_poch(aq_over(rho->value), L);
    return d;
  };
  // (aq/rho1 rho2)_{n}; tends to 1 when either rho is infinite
  auto coupling = [&](int n) {
    if (rho1.infinite || rho2.infinite) return RationalFunction(LaurentSeries::one());
    const Monomial x{rho1.value.sign * rho2.value.sign, aq.exponent - rho1.value.exponent - rho2.value.exponent};
    return RationalFunction::poch(x, n);
  };

  BaileyPairA1 out;
  out.a_exponent = ell;
  std::vector<RationalFunction> c;
  for (int r = 0; r <= bound; ++r) c.push_back(numerator_factor(r));
  for (int L = 0; L <= bound; ++L) {
    const RationalFunction d = denominator_factor(L);
    out.alpha.push_back(c[static_cast<std::size_t>(L)] * d * p.alpha[static_cast<std::size_t>(L)]);
    RationalFunction b;
    for (int r = 0; r <= L; ++r) {
      const RationalFunction& br = p.beta[static_cast<std::size_t>(r)];
      if (br.is_zero()) continue;
      b += c[static_cast<std::size_t>(r)] * coupling(L - r) * RationalFunction::reciprocal_qpoch(L - r) * br;
    }
    out.beta.push_back(d * b);
  }
  return out;
}

inline BaileyPairA1 transform_a1_limit(const BaileyPairA1& p) {
  return transform_a1(p, RhoParam::infinity(), RhoParam::infinity());
}

// L -> oo limit of the pair relation: sum_r alpha_r / ((q)_oo (aq)_oo), to
// `order`.  The alpha entries past the realized range must not contribute.
inline LaurentSeries a1_alpha_limit(const BaileyPairA1& p, int order) {
  LaurentSeries total = LaurentSeries::zero_to_order(order);
  bool closed = false;
  for (const RationalFunction& a : p.alpha) {
    const LaurentSeries s = a.series(order);
    if (s.is_zero()) {
      closed = true;
      continue;
    }
    closed = s.min_exponent() > order;
    total += s;
  }
  if (!closed) throw DomainError("pair not realized far enough for the requested order");
  const LaurentSeries den = multiply(infinite_product(qpow(1), 1, order),
                                     infinite_product(qpow(p.a_exponent + 1), 1, order), order);
  return multiply(total, reciprocal_of_unit(den, order), order);
}

}  // namespace qseries
