#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <tuple>
#include <vector>

#include "qseries/detail/memo.hpp"
#include "qseries/errors.hpp"
#include "qseries/integer.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/partition.hpp"
#include "qseries/qbinomial.hpp"

namespace qseries {

// q = 1 value of the supernomial: the coefficient of x^lambda in
// e_1^{L_1} e_2^{L_2} ... e_{n-1}^{L_{n-1}} over n variables.
inline Integer multinomial_generalized(const std::vector<int>& L, const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2 || static_cast<int>(L.size()) != n - 1) throw DomainError("multinomial needs |L| = |lambda| - 1");
  int weight = 0;
  for (int a = 1; a < n; ++a) weight += a * L[static_cast<std::size_t>(a - 1)];
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != weight) return 0;
  if (std::any_of(lambda.begin(), lambda.end(), [](int x) { return x < 0; })) return 0;
  if (std::any_of(L.begin(), L.end(), [](int x) { return x < 0; })) return 0;

  // every subset of {0..n-1} of size 1..n-1, grouped by size
  std::vector<std::pair<int, unsigned>> subsets;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask)
    subsets.emplace_back(__builtin_popcount(mask), mask);
  std::stable_sort(subsets.begin(), subsets.end());

  std::vector<Integer> fact(1, Integer(1));
  auto factorial = [&](int k) -> const Integer& {
    while (static_cast<int>(fact.size()) <= k) fact.push_back(fact.back() * static_cast<int>(fact.size()));
    return fact[static_cast<std::size_t>(k)];
  };

  Integer numerator = 1;
  for (int x : L) numerator *= factorial(x);

  std::vector<int> cap = lambda;
  std::vector<int> left(L.begin(), L.end());
  Integer total = 0;
  std::function<void(std::size_t, Integer)> go = [&](std::size_t idx, Integer denom) {
    if (idx == subsets.size()) {
      if (std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; }) &&
          std::all_of(left.begin(), left.end(), [](int c) { return c == 0; }))
        total += numerator / denom;
      return;
    }
    const auto [size, mask] = subsets[idx];
    int& rest = left[static_cast<std::size_t>(size - 1)];
    const bool last_of_size = idx + 1 == subsets.size() || subsets[idx + 1].first != size;
    int hi = rest;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) hi = std::min(hi, cap[static_cast<std::size_t>(p)]);
    const int lo = last_of_size ? rest : 0;
    for (int r = lo; r <= hi; ++r) {
      for (int p = 0; p < n; ++p)
        if (mask & (1u << p)) cap[static_cast<std::size_t>(p)] -= r;
      rest -= r;
      go(idx + 1, denom * factorial(r));
      rest += r;
      for (int p = 0; p < n; ++p)
        if (mask & (1u << p)) cap[static_cast<std::size_t>(p)] += r;
    }
  };
  go(0, Integer(1));
  return total;
}

// Chains  empty = nu^(0) < nu^(1) < ... < nu^(n) with nu^(n) the conjugate of
// (1^{L_1} ... (n-1)^{L_{n-1}}) and nu^(a)/nu^(a-1) a horizontal lambda_a-strip.
inline std::vector<YoungChain> young_chains(const std::vector<int>& L, const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2 || static_cast<int>(L.size()) != n - 1) throw DomainError("chains need |L| = |lambda| - 1");
  std::vector<YoungChain> out;
  if (std::any_of(lambda.begin(), lambda.end(), [](int x) { return x < 0; })) return out;
  if (std::any_of(L.begin(), L.end(), [](int x) { return x < 0; })) return out;
  std::vector<int> top(static_cast<std::size_t>(n - 1), 0);
  for (int j = n - 2; j >= 0; --j)
    top[static_cast<std::size_t>(j)] = L[static_cast<std::size_t>(j)] + (j + 1 < n - 1 ? top[static_cast<std::size_t>(j + 1)] : 0);
  std::vector<Partition> chain(static_cast<std::size_t>(n + 1));
  chain[static_cast<std::size_t>(n)] = Partition(top);
  if (chain[static_cast<std::size_t>(n)].weight() != std::accumulate(lambda.begin(), lambda.end(), 0)) return out;

  // fill nu^(a-1) from nu^(a): a-1 rows interlacing the rows of nu^(a)
  std::function<void(int)> level = [&](int a) {
    if (a == 0) {
      if (chain[0].weight() == 0) out.push_back({chain});
      return;
    }
    const Partition& outer = chain[static_cast<std::size_t>(a)];
    const int target = outer.weight() - lambda[static_cast<std::size_t>(a - 1)];
    if (target < 0) return;
    std::vector<int> rows(static_cast<std::size_t>(a > 0 ? a - 1 : 0), 0);
    std::function<void(int, int)> row = [&](int i, int sum) {
      if (i == a - 1) {
        if (sum != target) return;
        chain[static_cast<std::size_t>(a - 1)] = Partition(rows);
        level(a - 1);
        return;
      }
      for (int v = outer[i]; v >= outer[i + 1]; --v) {
        if (sum + v > target) continue;
        rows[static_cast<std::size_t>(i)] = v;
        row(i + 1, sum + v);
      }
    };
    row(0, 0);
  };
  level(n);
  return out;
}

// Supernomial from the chain representation, any rank.
inline LaurentSeries supernomial_strip(const std::vector<int>& L, const std::vector<int>& lambda) {
  LaurentSeries total;
  for (const YoungChain& c : young_chains(L, lambda)) {
    LaurentSeries term = LaurentSeries::one();
    const int n = static_cast<int>(lambda.size());
    for (int a = 1; a < n && !term.is_zero(); ++a) {
      const Partition& lo = c.diagrams[static_cast<std::size_t>(a)];
      const Partition& hi = c.diagrams[static_cast<std::size_t>(a + 1)];
      for (int j = 0; j < a; ++j) term = term * qbinomial(hi[j] - hi[j + 1], lo[j] - hi[j + 1]);
    }
    total += term;
  }
  return total;
}

// A2 supernomial as a single sum over m of three q-binomials.
inline LaurentSeries supernomial_a2m(int L1, int L2, int l1, int l2, int l3) {
  if (l1 + l2 + l3 != L1 + 2 * L2) return LaurentSeries::zero();
  if (L1 < 0 || L2 < 0 || l1 < 0 || l2 < 0 || l3 < 0) return LaurentSeries::zero();
  LaurentSeries total;
  const int lo = std::max({0, l2 - L2, l2 - l1});
  for (int m = lo; m <= l2; ++m) {
    const LaurentSeries& a = qbinomial(L1, l1 - L2 + m);
    if (a.is_zero()) continue;
    const LaurentSeries& b = qbinomial(L2, l2 - m);
    if (b.is_zero()) continue;
    total += qbinomial(l1 - l2 + 2 * m, m) * a * b;
  }
  return total;
}

// A2 supernomial as the six-index r-sum with weight q^{r_1 r_23}.
inline LaurentSeries supernomial_a2r(int L1, int L2, int l1, int l2, int l3) {
  if (l1 + l2 + l3 != L1 + 2 * L2) return LaurentSeries::zero();
  if (L1 < 0 || L2 < 0 || l1 < 0 || l2 < 0 || l3 < 0) return LaurentSeries::zero();
  LaurentSeries total;
  for (int r12 = 0; r12 <= L2; ++r12) {
    for (int r13 = 0; r12 + r13 <= L2; ++r13) {
      const int r23 = L2 - r12 - r13;
      const int r1 = l1 - r12 - r13;
      const int r2 = l2 - r12 - r23;
      const int r3 = l3 - r13 - r23;
      if (r1 < 0 || r2 < 0 || r3 < 0) continue;
      // (q)_{L1}/((q)_{r1}(q)_{r2}(q)_{r3}) (q)_{L2}/((q)_{r12}(q)_{r13}(q)_{r23})
      LaurentSeries t = qbinomial(L1, r1) * qbinomial(L1 - r1, r2) * qbinomial(L2, r12) *
                        qbinomial(L2 - r12, r13);
      total += t.shifted(r1 * r23);
    }
  }
  return total;
}

namespace detail {
inline Memo<std::array<int, 5>, LaurentSeries>& supernomial_memo() {
  static Memo<std::array<int, 5>, LaurentSeries> memo;
  return memo;
}
}  // namespace detail

// The A2 supernomial [L1,L2; l1,l2,l3] (memoized).
inline const LaurentSeries& supernomial(int L1, int L2, int l1, int l2, int l3) {
  static const LaurentSeries kZero;
  if (l1 + l2 + l3 != L1 + 2 * L2 || L1 < 0 || L2 < 0 || l1 < 0 || l2 < 0 || l3 < 0) return kZero;
  // symmetric in the lower entries
  std::array<int, 3> low{l1, l2, l3};
  std::sort(low.begin(), low.end(), std::greater<>());
  return detail::supernomial_memo().get({L1, L2, low[0], low[1], low[2]}, [&] {
    return supernomial_a2m(L1, L2, low[0], low[1], low[2]);
  });
}

}  // namespace qseries
