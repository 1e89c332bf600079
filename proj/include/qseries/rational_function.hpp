#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/pochhammer.hpp"

namespace qseries {

// N(q) / prod (1 - s q^e)^m with N an exact Laurent polynomial, s = +-1 and
// e >= 1.  Every Bailey-pair entry and every terminating hypergeometric sum
// is of this shape, so pair relations can be checked exactly.
class RationalFunction {
 public:
  using FactorKey = std::pair<int, int>;  // (s, e)

  RationalFunction() = default;
  RationalFunction(LaurentSeries numerator)  // NOLINT(google-explicit-constructor)
      : num_(std::move(numerator)) {
    if (!num_.is_exact()) throw std::invalid_argument("rational function numerator must be exact");
  }

  static RationalFunction monomial(const Monomial& m) {
    return RationalFunction(LaurentSeries::monomial(m.exponent, Integer(m.sign)));
  }

  // 1/(1 - f)
  static RationalFunction inverse_factor(const Monomial& f) {
    RationalFunction r(LaurentSeries::one());
    r.divide_by_factor(f);
    return r;
  }

  // (a;q)_n for any integer n; a vanishing denominator factor is a pole.
  static RationalFunction poch(const Monomial& a, int n) {
    if (n >= 0) return RationalFunction(detail::finite_product(a, n));
    RationalFunction r(LaurentSeries::one());
    for (int i = 1; i <= -n; ++i) r.divide_by_factor(a.times_q(-i), a, n);
    return r;
  }

  // 1/(a;q)_n.  For n < 0 this is the polynomial (a q^n;q)_{-n}, which
  // reproduces 1/(q)_n = 0.
  static RationalFunction reciprocal_poch(const Monomial& a, int n) {
    if (n < 0) return RationalFunction(detail::finite_product(a.times_q(n), -n));
    RationalFunction r(LaurentSeries::one());
    for (int i = 0; i < n; ++i) r.divide_by_factor(a.times_q(i), a, n);
    return r;
  }

  static RationalFunction reciprocal_qpoch(int n) { return reciprocal_poch(qpow(1), n); }

  const LaurentSeries& numerator() const { return num_; }
  const std::map<FactorKey, int>& denominator_factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LaurentSeries denominator() const {
    LaurentSeries d = LaurentSeries::one();
    for (const auto& [key, m] : den_)
      for (int i = 0; i < m; ++i) d = d * LaurentSeries::one_minus(key.second, Integer(key.first));
    return d;
  }

  RationalFunction shifted(int k) const {
    RationalFunction r = *this;
    r.num_ = r.num_.shifted(k);
    return r;
  }

  RationalFunction scaled(const Integer& c) const {
    RationalFunction r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }

  RationalFunction times(const Monomial& m) const { return shifted(m.exponent).scaled(Integer(m.sign)); }

  RationalFunction operator-() const { return scaled(Integer(-1)); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFunction r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [key, m] : b.den_) r.den_[key] += m;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalFunction r;
    r.den_ = common_multiple(a.den_, b.den_);
    r.num_ = lift(a, r.den_) + lift(b, r.den_);
    if (r.num_.is_zero()) r.den_.clear();
    r.reduce();
    return r;
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    const auto d = common_multiple(a.den_, b.den_);
    return identical(lift(a, d), lift(b, d));
  }

  // Cancel denominator factors that divide the numerator.
  void reduce() {
    for (auto it = den_.begin(); it != den_.end();) {
      while (it->second > 0) {
        auto quotient = exact_quotient(num_, it->first.first, it->first.second);
        if (!quotient) break;
        num_ = std::move(*quotient);
        --it->second;
      }
      it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
  }

  // The Laurent polynomial this function equals, if it is one.
  std::optional<LaurentSeries> as_polynomial() const {
    RationalFunction r = *this;
    r.reduce();
    if (!r.den_.empty()) return std::nullopt;
    return r.num_;
  }

  LaurentSeries series(int order) const {
    if (den_.empty()) return num_.truncated(order);
    if (num_.is_zero()) return LaurentSeries::zero();
    std::vector<Monomial> factors;
    for (const auto& [key, m] : den_)
      for (int i = 0; i < m; ++i) factors.push_back({key.first, key.second});
    const int inner = order - num_.min_exponent();
    return multiply(num_, detail::reciprocal_of_factors(factors, inner), order).truncated(order);
  }

  std::string to_string() const {
    std::string s = "(" + num_.to_string() + ")";
    for (const auto& [key, m] : den_) {
      s += " / (1 " + std::string(key.first > 0 ? "-" : "+") + " q^" + std::to_string(key.second) + ")";
      if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
  }

 private:
  void divide_by_factor(const Monomial& f, const Monomial& base = {}, int n = 0) {
    if (f.exponent == 0) {
      if (f.sign == 1)
        throw PoleError("vanishing denominator factor (1 - q^0) in (" + to_string_of(base) + ";q)_" +
                        std::to_string(n));
      throw PoleError("non-unit denominator factor (1 + q^0) in (" + to_string_of(base) + ";q)_" +
                      std::to_string(n));
    }
    if (f.exponent > 0) {
      ++den_[{f.sign, f.exponent}];
      return;
    }
    // 1/(1 - s q^e) = -s q^{-e}/(1 - s q^{-e})
    num_ = num_.shifted(-f.exponent).scaled(Integer(-f.sign));
    ++den_[{f.sign, -f.exponent}];
  }

  static std::string to_string_of(const Monomial& m) { return qseries::to_string(m); }

  static std::map<FactorKey, int> common_multiple(const std::map<FactorKey, int>& a,
                                                  const std::map<FactorKey, int>& b) {
    std::map<FactorKey, int> d = a;
    for (const auto& [key, m] : b) d[key] = std::max(d[key], m);
    return d;
  }

  // numerator over the larger denominator d
  static LaurentSeries lift(const RationalFunction& x, const std::map<FactorKey, int>& d) {
    if (x.num_.is_zero()) return LaurentSeries::zero();
    std::vector<Integer> c = x.num_.coefficients();
    for (const auto& [key, m] : d) {
      auto it = x.den_.find(key);
      const int extra = m - (it == x.den_.end() ? 0 : it->second);
      for (int i = 0; i < extra; ++i) {
        const std::size_t e = static_cast<std::size_t>(key.second);
        c.resize(c.size() + e, Integer(0));
        for (std::size_t j = c.size(); j-- > e;) {
          if (key.first > 0)
            c[j] -= c[j - e];
          else
            c[j] += c[j - e];
        }
      }
    }
    return LaurentSeries::polynomial(x.num_.min_exponent(), std::move(c));
  }

  // p / (1 - s q^e) when the division is exact.
  static std::optional<LaurentSeries> exact_quotient(const LaurentSeries& p, int s, int e) {
    if (p.is_zero()) return p;
    const auto& c = p.coefficients();
    const int d = static_cast<int>(c.size()) - 1;
    if (d < e) return std::nullopt;
    std::vector<Integer> quo(static_cast<std::size_t>(d - e + 1));
    for (int i = 0; i <= d - e; ++i) {
      quo[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
      if (i >= e) {
        if (s > 0)
          quo[static_cast<std::size_t>(i)] += quo[static_cast<std::size_t>(i - e)];
        else
          quo[static_cast<std::size_t>(i)] -= quo[static_cast<std::size_t>(i - e)];
      }
    }
    // remainder: coefficients d-e+1..d must come out as -s * quo[i-e]
    for (int i = d - e + 1; i <= d; ++i) {
      Integer expect = i - e >= 0 ? Integer(quo[static_cast<std::size_t>(i - e)]) : Integer(0);
      if (s > 0) expect = -expect;
      if (c[static_cast<std::size_t>(i)] != expect) return std::nullopt;
    }
    return LaurentSeries::polynomial(p.min_exponent(), std::move(quo));
  }

  LaurentSeries num_;
  std::map<FactorKey, int> den_;
};

}  // namespace qseries
