#pragma once

#include <climits>
#include <string>
#include <tuple>
#include <vector>

#include "qseries/detail/memo.hpp"
#include "qseries/errors.hpp"
#include "qseries/laurent_series.hpp"

namespace qseries {

// sign * q^exponent, the only kind of parameter the library handles.
struct Monomial {
  int sign = 1;
  int exponent = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  Monomial times_q(int k) const { return {sign, exponent + k}; }
};

inline Monomial qpow(int exponent) { return {1, exponent}; }

inline std::string to_string(const Monomial& m) {
  std::string s = m.sign < 0 ? "-" : "";
  return s + "q^" + std::to_string(m.exponent);
}

// A Pochhammer length: a (possibly negative) integer or infinity.
class Count {
 public:
  Count(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  static Count infinite() {
    Count c(0);
    c.infinite_ = true;
    return c;
  }
  bool is_infinite() const { return infinite_; }
  int value() const { return value_; }

 private:
  int value_;
  bool infinite_ = false;
};

enum class PochKind { finite, zero, infinite };

struct PochValue {
  PochKind kind = PochKind::finite;
  LaurentSeries value;
};

namespace detail {

inline bool vanishes(const Monomial& a) { return a.sign == 1 && a.exponent == 0; }

// 1 - a
inline LaurentSeries factor(const Monomial& a) {
  return LaurentSeries::one_minus(a.exponent, Integer(a.sign));
}

// prod_{i=0}^{n-1} (1 - a q^i) as an exact polynomial, n >= 0.
inline LaurentSeries finite_product(const Monomial& a, int n) {
  LaurentSeries p = LaurentSeries::one();
  for (int i = 0; i < n; ++i) {
    const Monomial f = a.times_q(i);
    if (vanishes(f)) return LaurentSeries::zero();
    p = p * factor(f);
  }
  return p;
}

// prod_i 1/(1 - a_i) expanded to `order`, for factors that do not vanish.
inline LaurentSeries reciprocal_of_factors(const std::vector<Monomial>& factors, int order) {
  int shift = 0;
  int sign = 1;
  int bound = 0;
  std::vector<std::pair<int, int>> strides;  // (exponent > 0, sign)
  for (const Monomial& f : factors) {
    if (f.exponent > 0) {
      strides.emplace_back(f.exponent, f.sign);
      bound -= f.exponent;
    } else if (f.exponent < 0) {
      // 1/(1 - s q^e) = -s q^{-e} / (1 - s q^{-e})
      shift -= f.exponent;
      sign *= -f.sign;
      strides.emplace_back(-f.exponent, f.sign);
    } else if (f.sign == 1) {
      throw PoleError("vanishing factor (1 - q^0) in a denominator");
    } else {
      throw PoleError("non-invertible factor (1 + q^0) in a denominator");
    }
  }
  const int count = order - shift;
  std::vector<Integer> g;
  if (count >= 0) {
    g.assign(static_cast<std::size_t>(count) + 1, Integer(0));
    g[0] = 1;
    for (const auto& [e, s] : strides) {
      for (int j = e; j <= count; ++j) {
        const Integer& prev = g[static_cast<std::size_t>(j - e)];
        if (prev == 0) continue;
        if (s == 1)
          g[static_cast<std::size_t>(j)] += prev;
        else
          g[static_cast<std::size_t>(j)] -= prev;
      }
    }
    if (sign < 0)
      for (auto& x : g) x = -x;
  }
  LaurentSeries r = LaurentSeries::truncated_series(shift, std::move(g), order);
  r.set_degree_bound(bound);
  return r;
}

inline Memo<std::tuple<int, int, int, int>, LaurentSeries>& reciprocal_poch_memo() {
  static Memo<std::tuple<int, int, int, int>, LaurentSeries> memo;
  return memo;
}

inline Memo<int, LaurentSeries>& qpoch_memo() {
  static Memo<int, LaurentSeries> memo;
  return memo;
}

}  // namespace detail

// (a;q)_n.  For n >= 0 the value is an exact polynomial; for n < 0 it is
// 1/prod_{i=1}^{|n|}(1 - a q^{-i}) expanded to `order`; for n = oo the
// product truncated at `order`.
inline PochValue poch(const Monomial& a, Count n, int order = 0);

// (a; q^step)_oo truncated at `order`; the exact zero when a factor vanishes.
inline LaurentSeries infinite_product(const Monomial& a, int step, int order) {
  if (step < 1) throw std::invalid_argument("infinite product step must be positive");
  if (a.sign == 1 && a.exponent <= 0 && (-a.exponent) % step == 0) return LaurentSeries::zero();
  LaurentSeries low = LaurentSeries::one();
  int valuation = 0;
  int e = a.exponent;
  for (; e <= 0; e += step) {
    low = low * detail::factor({a.sign, e});
    if (e < 0) valuation += e;
  }
  const int count = order - valuation;
  std::vector<Integer> g;
  if (count >= 0) {
    g.assign(static_cast<std::size_t>(count) + 1, Integer(0));
    g[0] = 1;
    for (; e <= count; e += step) {
      for (int j = count; j >= e; --j) {
        const Integer& prev = g[static_cast<std::size_t>(j - e)];
        if (prev == 0) continue;
        if (a.sign == 1)
          g[static_cast<std::size_t>(j)] -= prev;
        else
          g[static_cast<std::size_t>(j)] += prev;
      }
    }
  }
  LaurentSeries high = LaurentSeries::truncated_series(0, std::move(g), count);
  return multiply(low, high, order).truncated(order);
}

inline PochValue poch(const Monomial& a, Count n, int order) {
  if (n.is_infinite()) {
    LaurentSeries v = infinite_product(a, 1, order);
    if (v.is_exact() && v.is_zero()) return {PochKind::zero, LaurentSeries::zero()};
    return {PochKind::finite, std::move(v)};
  }
  const int len = n.value();
  if (len >= 0) {
    LaurentSeries v = detail::finite_product(a, len);
    if (v.is_zero()) return {PochKind::zero, LaurentSeries::zero()};
    return {PochKind::finite, std::move(v)};
  }
  LaurentSeries den = detail::finite_product(a.times_q(len), -len);
  if (den.is_zero()) return {PochKind::infinite, LaurentSeries::zero()};
  return {PochKind::finite, reciprocal_of_unit(den, order)};
}

inline PochValue poch(int m, Count n, int order = 0) { return poch(qpow(m), n, order); }

// 1/(a)_n read off a PochValue: the zero series when the value is infinite.
inline LaurentSeries reciprocal(const PochValue& p, int order) {
  switch (p.kind) {
    case PochKind::infinite:
      return LaurentSeries::zero();
    case PochKind::zero:
      throw PoleError("reciprocal of a vanishing Pochhammer symbol");
    case PochKind::finite:
      break;
  }
  return reciprocal_of_unit(p.value, order);
}

// 1/(a;q)_n.  Exact for n < 0 (where it may vanish), a series otherwise.
inline LaurentSeries reciprocal_poch(const Monomial& a, int n, int order) {
  if (n < 0) return detail::finite_product(a.times_q(n), -n);
  const auto key = std::make_tuple(a.sign, a.exponent, n, order);
  return detail::reciprocal_poch_memo().get(key, [&] {
    std::vector<Monomial> factors;
    for (int i = 0; i < n; ++i) {
      const Monomial f = a.times_q(i);
      if (detail::vanishes(f))
        throw PoleError("1/(" + to_string(a) + ";q)_" + std::to_string(n) +
                        " has a vanishing denominator factor");
      factors.push_back(f);
    }
    return detail::reciprocal_of_factors(factors, order);
  });
}

inline LaurentSeries reciprocal_poch(int m, int n, int order) {
  return reciprocal_poch(qpow(m), n, order);
}

// (q;q)_n for n >= 0, exact.
inline const LaurentSeries& qpoch(int n) {
  if (n < 0) throw DomainError("(q)_n with n < 0 is infinite");
  return detail::qpoch_memo().get(n, [&] { return detail::finite_product(qpow(1), n); });
}

// 1/(q;q)_n, the zero series for n < 0.
inline LaurentSeries reciprocal_qpoch(int n, int order) {
  if (n < 0) return LaurentSeries::zero();
  return reciprocal_poch(qpow(1), n, order);
}

}  // namespace qseries
