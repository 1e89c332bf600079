#pragma once

#include <utility>
#include <vector>

#include "qseries/detail/memo.hpp"
#include "qseries/laurent_series.hpp"

namespace qseries {

namespace detail {

inline Memo<std::pair<int, int>, LaurentSeries>& qbinomial_memo() {
  static Memo<std::pair<int, int>, LaurentSeries> memo;
  return memo;
}

// [n;m] built as prod_{j=1}^{m} (1 - q^{n-j+1})/(1 - q^j); every division
// is exact, so it runs as a prefix sum.
inline LaurentSeries compute_qbinomial(int n, int m) {
  std::vector<Integer> c{Integer(1)};
  for (int j = 1; j <= m; ++j) {
    const int up = n - j + 1;
    c.resize(c.size() + static_cast<std::size_t>(up), Integer(0));
    for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(up);) c[i] -= c[i - static_cast<std::size_t>(up)];
    for (std::size_t i = static_cast<std::size_t>(j); i < c.size(); ++i) c[i] += c[i - static_cast<std::size_t>(j)];
    c.resize(c.size() - static_cast<std::size_t>(j));
  }
  return LaurentSeries::polynomial(0, std::move(c));
}

}  // namespace detail

// Gaussian polynomial [n;m]; zero unless 0 <= m <= n.
inline const LaurentSeries& qbinomial(int n, int m) {
  static const LaurentSeries kZero;
  if (m < 0 || m > n) return kZero;
  if (2 * m > n) m = n - m;
  return detail::qbinomial_memo().get({n, m}, [&] { return detail::compute_qbinomial(n, m); });
}

// (q^x)_n/(q)_n for n >= 0 as an exact polynomial.
inline LaurentSeries qratio(int x, int n) {
  if (n < 0) throw std::invalid_argument("qratio needs n >= 0");
  if (x >= 1) return qbinomial(x + n - 1, n);
  if (x + n - 1 >= 0) return LaurentSeries::zero();
  // every factor has a negative exponent: (q^x)_n = (-1)^n q^{nx+n(n-1)/2} (q^{-x-n+1})_n
  LaurentSeries r = qbinomial(-x, n).shifted(n * x + n * (n - 1) / 2);
  return n % 2 == 0 ? r : -r;
}

}  // namespace qseries
