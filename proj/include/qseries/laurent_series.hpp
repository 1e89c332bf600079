#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/integer.hpp"

namespace qseries {

namespace detail {

// Degree bookkeeping uses INT_MAX for "unknown" and INT_MIN for "minus
// infinity" (the zero function).
inline constexpr int kUnknownDegree = INT_MAX;
inline constexpr int kZeroDegree = INT_MIN;

inline int degree_sum(int a, int b) {
  if (a == kZeroDegree || b == kZeroDegree) return kZeroDegree;
  if (a == kUnknownDegree || b == kUnknownDegree) return kUnknownDegree;
  return a + b;
}

inline int degree_max(int a, int b) { return std::max(a, b); }

inline int saturating_add(int a, int b) {
  if (a == INT_MAX || b == INT_MAX) return INT_MAX;
  return a + b;
}

}  // namespace detail

template <class Coeff>
struct Mismatch {
  int exponent;
  Coeff lhs;
  Coeff rhs;
};

// A formal Laurent series in q with exact coefficients.  A series is either
// exact (a Laurent polynomial known in full) or truncated at order(): the
// coefficients of q^e for e > order() are unknown.  Alongside the
// coefficients the series carries an upper bound for the degree at q = oo of
// the rational function it expands, when one is known; exact identity checks
// use it to pick a working order.
template <class Coeff>
class BasicLaurentSeries {
 public:
  using coefficient_type = Coeff;
  static constexpr int kExactOrder = INT_MAX;

  BasicLaurentSeries() = default;

  static BasicLaurentSeries zero() { return BasicLaurentSeries(); }

  static BasicLaurentSeries one() { return monomial(0); }

  static BasicLaurentSeries monomial(int exponent, Coeff c = Coeff(1)) {
    BasicLaurentSeries s;
    if (c != 0) {
      s.min_exp_ = exponent;
      s.coeffs_.push_back(std::move(c));
    }
    s.normalize();
    return s;
  }

  // 1 - c q^e, the building block of every Pochhammer symbol.
  static BasicLaurentSeries one_minus(int exponent, Coeff c = Coeff(1)) {
    return one() - monomial(exponent, std::move(c));
  }

  static BasicLaurentSeries polynomial(int min_exponent, std::vector<Coeff> coeffs) {
    BasicLaurentSeries s;
    s.min_exp_ = min_exponent;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  static BasicLaurentSeries truncated_series(int min_exponent, std::vector<Coeff> coeffs,
                                             int order) {
    BasicLaurentSeries s;
    s.min_exp_ = min_exponent;
    s.coeffs_ = std::move(coeffs);
    s.exact_ = false;
    s.order_ = order;
    s.degree_bound_ = detail::kUnknownDegree;
    s.normalize();
    return s;
  }

  static BasicLaurentSeries zero_to_order(int order) {
    return truncated_series(0, {}, order);
  }

  bool is_exact() const { return exact_; }
  int order() const { return exact_ ? kExactOrder : order_; }
  int min_exponent() const { return min_exp_; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  // Lowest exponent with a nonzero coefficient; for a truncated series with
  // no known nonzero coefficient this is order() + 1.
  int valuation() const {
    if (!coeffs_.empty()) return min_exp_;
    if (exact_) throw std::logic_error("valuation of the zero polynomial");
    return order_ + 1;
  }

  int degree() const {
    if (coeffs_.empty()) throw std::logic_error("degree of an empty series");
    return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
  }

  // nullopt when unknown; INT_MIN for the zero function.
  std::optional<int> degree_bound() const {
    if (degree_bound_ == detail::kUnknownDegree) return std::nullopt;
    return degree_bound_;
  }

  BasicLaurentSeries& set_degree_bound(std::optional<int> bound) {
    if (!exact_) degree_bound_ = bound ? *bound : detail::kUnknownDegree;
    return *this;
  }

  Coeff coefficient(int exponent) const {
    if (!exact_ && exponent > order_)
      throw std::out_of_range("coefficient beyond truncation order");
    if (coeffs_.empty() || exponent < min_exp_ || exponent > degree()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
  }

  BasicLaurentSeries truncated(int order) const {
    BasicLaurentSeries s = *this;
    if (s.exact_) {
      s.exact_ = false;
      s.order_ = order;
    } else {
      s.order_ = std::min(s.order_, order);
    }
    s.normalize();
    return s;
  }

  BasicLaurentSeries shifted(int k) const {
    BasicLaurentSeries s = *this;
    if (!s.coeffs_.empty()) s.min_exp_ += k;
    if (!s.exact_) s.order_ += k;
    s.degree_bound_ = detail::degree_sum(s.degree_bound_, k);
    return s;
  }

  BasicLaurentSeries scaled(const Coeff& c) const {
    if (c == 0) return zero();
    BasicLaurentSeries s = *this;
    for (auto& x : s.coeffs_) x *= c;
    return s;
  }

  // q -> q^k for k >= 1.
  BasicLaurentSeries dilated(int k) const {
    if (k < 1) throw std::invalid_argument("dilation factor must be positive");
    BasicLaurentSeries s;
    s.exact_ = exact_;
    s.order_ = exact_ ? 0 : order_ * k + (k - 1);
    s.degree_bound_ = (degree_bound_ == detail::kUnknownDegree || degree_bound_ == detail::kZeroDegree)
                          ? degree_bound_
                          : degree_bound_ * k;
    if (!coeffs_.empty()) {
      s.min_exp_ = min_exp_ * k;
      s.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, Coeff(0));
      for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
    }
    s.normalize();
    return s;
  }

  BasicLaurentSeries operator-() const {
    BasicLaurentSeries s = *this;
    for (auto& x : s.coeffs_) x = -x;
    return s;
  }

  friend BasicLaurentSeries operator+(const BasicLaurentSeries& a, const BasicLaurentSeries& b) {
    return add(a, b, false);
  }

  friend BasicLaurentSeries operator-(const BasicLaurentSeries& a, const BasicLaurentSeries& b) {
    return add(a, b, true);
  }

  friend BasicLaurentSeries operator*(const BasicLaurentSeries& a, const BasicLaurentSeries& b) {
    return multiply(a, b, INT_MAX);
  }

  BasicLaurentSeries& operator+=(const BasicLaurentSeries& b) { return *this = add(*this, b, false); }
  BasicLaurentSeries& operator-=(const BasicLaurentSeries& b) { return *this = add(*this, b, true); }
  BasicLaurentSeries& operator*=(const BasicLaurentSeries& b) { return *this = multiply(*this, b, INT_MAX); }

  // Product whose coefficients above `cap` are not computed.  Exact operands
  // stay exact when the full product fits below the cap.
  friend BasicLaurentSeries multiply(const BasicLaurentSeries& a, const BasicLaurentSeries& b,
                                     int cap) {
    if ((a.exact_ && a.is_zero()) || (b.exact_ && b.is_zero())) return zero();
    const int oa = a.order();
    const int ob = b.order();
    const int va = a.valuation();
    const int vb = b.valuation();
    int order = std::min(detail::saturating_add(oa, vb), detail::saturating_add(ob, va));
    bool exact = a.exact_ && b.exact_;
    if (exact && a.degree() + b.degree() > cap) exact = false;
    if (!exact) order = std::min(order, cap);

    BasicLaurentSeries s;
    s.exact_ = exact;
    s.order_ = exact ? 0 : order;
    s.degree_bound_ = detail::degree_sum(a.degree_bound_, b.degree_bound_);
    if (!a.is_zero() && !b.is_zero()) {
      const int lo = a.min_exp_ + b.min_exp_;
      int hi = a.degree() + b.degree();
      if (!exact) hi = std::min(hi, order);
      if (hi >= lo) {
        s.min_exp_ = lo;
        s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Coeff(0));
        Coeff t;
        const int nb = static_cast<int>(b.coeffs_.size());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
          const Coeff& x = a.coeffs_[i];
          if (x == 0) continue;
          const int base = static_cast<int>(i);
          const int jmax = std::min(nb - 1, hi - lo - base);
          if (jmax < 0) break;
          Coeff* out = s.coeffs_.data() + base;
          for (int j = 0; j <= jmax; ++j) {
            const Coeff& y = b.coeffs_[static_cast<std::size_t>(j)];
            if (y == 0) continue;
            t = x;
            t *= y;
            out[j] += t;
          }
        }
      }
    }
    s.normalize();
    return s;
  }

  // 1/a for a series whose lowest coefficient is +1 or -1.  The result is
  // truncated at `order` (and at the precision available from a).
  friend BasicLaurentSeries reciprocal_of_unit(const BasicLaurentSeries& a, int order) {
    if (a.is_zero()) throw PoleError("reciprocal of a zero series");
    const Coeff& lead = a.coeffs_.front();
    if (lead != 1 && lead != -1)
      throw PoleError("reciprocal of a series whose lowest coefficient is not a unit");
    const int v = a.min_exp_;
    int target = order;
    if (!a.exact_) target = std::min(target, a.order_ - 2 * v);
    BasicLaurentSeries s;
    s.exact_ = false;
    s.order_ = target;
    if (a.exact_) {
      s.degree_bound_ = -a.degree();
    } else if (a.degree_bound_ != detail::kUnknownDegree) {
      // a bound on deg(a) does not bound deg(1/a) from above
      s.degree_bound_ = detail::kUnknownDegree;
    }
    const int count = target + v;  // relative precision
    if (count < 0) {
      s.normalize();
      return s;
    }
    std::vector<std::pair<int, const Coeff*>> terms;
    for (std::size_t j = 1; j < a.coeffs_.size() && static_cast<int>(j) <= count; ++j)
      if (a.coeffs_[j] != 0) terms.emplace_back(static_cast<int>(j), &a.coeffs_[j]);
    std::vector<Coeff> g(static_cast<std::size_t>(count) + 1, Coeff(0));
    g[0] = lead;
    Coeff acc, t;
    for (int i = 1; i <= count; ++i) {
      acc = 0;
      for (const auto& [j, f] : terms) {
        if (j > i) break;
        const Coeff& h = g[static_cast<std::size_t>(i - j)];
        if (h == 0) continue;
        t = *f;
        t *= h;
        acc += t;
      }
      g[static_cast<std::size_t>(i)] = lead == 1 ? Coeff(-acc) : acc;
    }
    s.min_exp_ = -v;
    s.coeffs_ = std::move(g);
    s.normalize();
    return s;
  }

  friend std::optional<Mismatch<Coeff>> first_mismatch(const BasicLaurentSeries& a,
                                                       const BasicLaurentSeries& b) {
    const int limit = std::min(a.order(), b.order());
    int lo = INT_MAX, hi = INT_MIN;
    if (!a.is_zero()) {
      lo = std::min(lo, a.min_exp_);
      hi = std::max(hi, a.degree());
    }
    if (!b.is_zero()) {
      lo = std::min(lo, b.min_exp_);
      hi = std::max(hi, b.degree());
    }
    hi = std::min(hi, limit);
    for (int e = lo; e <= hi; ++e) {
      Coeff x = a.raw(e), y = b.raw(e);
      if (x != y) return Mismatch<Coeff>{e, std::move(x), std::move(y)};
    }
    return std::nullopt;
  }

  // Equality on the common known range (all coefficients when both exact).
  friend bool operator==(const BasicLaurentSeries& a, const BasicLaurentSeries& b) {
    return !first_mismatch(a, b).has_value();
  }

  // Field-by-field equality, used by the serialization round trip.
  friend bool identical(const BasicLaurentSeries& a, const BasicLaurentSeries& b) {
    return a.exact_ == b.exact_ && a.order() == b.order() && a.min_exp_ == b.min_exp_ &&
           a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicLaurentSeries& s) { return os << s.to_string(); }

  std::string to_string(const char* var = "q") const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Coeff& c = coeffs_[i];
      if (c == 0) continue;
      const int e = min_exp_ + static_cast<int>(i);
      Coeff mag = c < 0 ? Coeff(-c) : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        out << mag;
        continue;
      }
      if (mag != 1) out << mag << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
    if (!exact_) {
      out << (first ? "" : " + ") << "O(" << var << "^" << order_ + 1 << ")";
    } else if (first) {
      out << "0";
    }
    return out.str();
  }

 private:
  Coeff raw(int e) const {
    if (coeffs_.empty() || e < min_exp_ || e > degree()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }

  static BasicLaurentSeries add(const BasicLaurentSeries& a, const BasicLaurentSeries& b,
                                bool subtract) {
    BasicLaurentSeries s;
    s.exact_ = a.exact_ && b.exact_;
    const int order = std::min(a.order(), b.order());
    s.order_ = s.exact_ ? 0 : order;
    s.degree_bound_ = detail::degree_max(a.degree_bound_, b.degree_bound_);
    int lo = INT_MAX, hi = INT_MIN;
    if (!a.is_zero()) {
      lo = std::min(lo, a.min_exp_);
      hi = std::max(hi, a.degree());
    }
    if (!b.is_zero()) {
      lo = std::min(lo, b.min_exp_);
      hi = std::max(hi, b.degree());
    }
    if (!s.exact_) hi = std::min(hi, order);
    if (lo <= hi) {
      s.min_exp_ = lo;
      s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Coeff(0));
      for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const int e = a.min_exp_ + static_cast<int>(i);
        if (e > hi) break;
        s.coeffs_[static_cast<std::size_t>(e - lo)] += a.coeffs_[i];
      }
      for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        const int e = b.min_exp_ + static_cast<int>(i);
        if (e > hi) break;
        if (subtract)
          s.coeffs_[static_cast<std::size_t>(e - lo)] -= b.coeffs_[i];
        else
          s.coeffs_[static_cast<std::size_t>(e - lo)] += b.coeffs_[i];
      }
    }
    s.normalize();
    return s;
  }

  void normalize() {
    if (!exact_ && !coeffs_.empty()) {
      const long keep = static_cast<long>(order_) - min_exp_ + 1;
      if (keep <= 0)
        coeffs_.clear();
      else if (static_cast<std::size_t>(keep) < coeffs_.size())
        coeffs_.resize(static_cast<std::size_t>(keep));
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_exp_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) min_exp_ = 0;
    if (exact_) degree_bound_ = coeffs_.empty() ? detail::kZeroDegree : degree();
  }

  int min_exp_ = 0;
  std::vector<Coeff> coeffs_;
  int order_ = 0;
  bool exact_ = true;
  int degree_bound_ = detail::kZeroDegree;
};

using LaurentSeries = BasicLaurentSeries<Integer>;
using SeriesMismatch = Mismatch<Integer>;

}  // namespace qseries
