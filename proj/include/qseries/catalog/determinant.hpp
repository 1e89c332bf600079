#pragma once

#include <vector>

#include "qseries/catalog/sums.hpp"
#include "qseries/errors.hpp"
#include "qseries/rational_function.hpp"

namespace qseries::catalog {

enum class DeterminantMode { direct, product };

// det_{s,t} q^{t(t - B_s)} [L1+L2; L1 - B_s + t] for n = 2 or 3, either by
// cofactor expansion or by the closed product
//   prod_{s<t} (1 - q^{B_t - B_s}) prod_s q^{s(s - B_s)} (q)_{L1+L2+s-1} / ((q)_{L1-B_s+n} (q)_{L2+B_s-1}).
inline LaurentSeries kratt_determinant(const std::vector<int>& B, int L1, int L2, DeterminantMode mode) {
  const int n = static_cast<int>(B.size());
  if (n != 2 && n != 3) throw DomainError("determinant size must be 2 or 3");
  if (L1 < 0 || L2 < 0) throw DomainError("L1 and L2 must be nonnegative");
  auto b = [&](int s) { return B[static_cast<std::size_t>(s - 1)]; };
  if (mode == DeterminantMode::direct) {
    auto entry = [&](int s, int t) { return qbin_shift(L1 + L2, L1 - b(s) + t, t * (t - b(s))); };
    if (n == 2) return entry(1, 1) * entry(2, 2) - entry(1, 2) * entry(2, 1);
    Matrix3 m;
    for (int s = 1; s <= 3; ++s)
      for (int t = 1; t <= 3; ++t) m[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)] = entry(s, t);
    return det3(m);
  }
  RationalFunction r(LaurentSeries::one());
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) r *= RationalFunction(LaurentSeries::one_minus(b(t) - b(s)));
  if (r.is_zero()) return LaurentSeries::zero();
  for (int s = 1; s <= n; ++s) {
    r *= RationalFunction(qpoch(L1 + L2 + s - 1)).shifted(s * (s - b(s)));
    r *= RationalFunction::reciprocal_qpoch(L1 - b(s) + n) * RationalFunction::reciprocal_qpoch(L2 + b(s) - 1);
    if (r.is_zero()) return LaurentSeries::zero();
  }
  auto p = r.as_polynomial();
  if (!p) throw std::logic_error("determinant product is not a polynomial");
  return *p;
}

// The 2x2 evaluation det_{i,j} q^{j(j - B_i)} / (q)_{L + B_i - j}
//   = q^{5 - B_1 - 2B_2} (1 - q^{B_2 - B_1}) / ((q)_{L+B_1-1} (q)_{L+B_2-1}).
struct TwoByTwo {
  RationalFunction lhs;
  RationalFunction rhs;
};

inline TwoByTwo two_by_two_evaluation(int B1, int B2, int L) {
  const int B[2] = {B1, B2};
  auto entry = [&](int i, int j) {
    return RationalFunction::reciprocal_qpoch(L + B[i - 1] - j).shifted(j * (j - B[i - 1]));
  };
  TwoByTwo out;
  out.lhs = entry(1, 1) * entry(2, 2) - entry(1, 2) * entry(2, 1);
  out.rhs = (RationalFunction(LaurentSeries::one_minus(B2 - B1)) * RationalFunction::reciprocal_qpoch(L + B1 - 1) *
             RationalFunction::reciprocal_qpoch(L + B2 - 1))
                .shifted(5 - B1 - 2 * B2);
  return out;
}

}  // namespace qseries::catalog
