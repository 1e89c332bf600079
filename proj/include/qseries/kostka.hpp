#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/partition.hpp"
#include "qseries/permutation.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/serialization.hpp"
#include "qseries/supernomial.hpp"
#include "qseries/tableau.hpp"

namespace qseries {

struct KostkaEntry {
  Partition lambda;
  Partition mu;
  LaurentSeries polynomial;
};

// K_{lambda mu}(q) as the charge generating function of semistandard
// tableaux of shape lambda and content mu.
inline LaurentSeries kostka_charge(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw DomainError("Kostka polynomial needs |lambda| = |mu|");
  if (!lambda.dominates(mu)) return LaurentSeries::zero();
  std::vector<Integer> coeffs;
  for (const Tableau& t : semistandard_tableaux(lambda, mu.parts())) {
    const std::size_t c = static_cast<std::size_t>(charge(t.reading_word()));
    if (coeffs.size() <= c) coeffs.resize(c + 1, Integer(0));
    coeffs[c] += 1;
  }
  return LaurentSeries::polynomial(0, std::move(coeffs));
}

// Number of semistandard tableaux of shape lambda and content mu.
inline Integer kostka_number(const Partition& lambda, const std::vector<int>& mu) {
  return Integer(semistandard_tableaux(lambda, mu).size());
}

// K_{lambda' mu}(q) for mu = (2^{L2} 1^{L1}) and lambda with at most three
// parts, as the alternating sum of A2 supernomials
//   sum_sigma eps(sigma) [L1, L2; lambda_1 + sigma_1 - 1, lambda_2 + sigma_2 - 2, lambda_3 + sigma_3 - 3].
inline LaurentSeries kostka_from_supernomial(const Partition& lambda, int L1, int L2) {
  if (L1 < 0 || L2 < 0) throw DomainError("multiplicities must be nonnegative");
  if (lambda.weight() != L1 + 2 * L2) throw DomainError("Kostka polynomial needs |lambda| = |mu|");
  if (lambda.length() > 3) return LaurentSeries::zero();
  LaurentSeries total;
  for (const SignedPermutation& s : symmetric_group3()) {
    const LaurentSeries& t =
        supernomial(L1, L2, lambda[0] + s(1) - 1, lambda[1] + s(2) - 2, lambda[2] + s(3) - 3);
    if (t.is_zero()) continue;
    total += s.sign > 0 ? t : -t;
  }
  return total;
}

// All K_{lambda mu} with |lambda| = |mu| = n, lambda ⊵ mu, by charge.
inline std::vector<KostkaEntry> kostka_table(int n) {
  std::vector<KostkaEntry> out;
  const auto parts = partitions_of(n);
  for (const Partition& lambda : parts)
    for (const Partition& mu : parts)
      if (lambda.dominates(mu)) out.push_back({lambda, mu, kostka_charge(lambda, mu)});
  return out;
}

// `lambda | mu | polynomial` with the polynomial in fixture form.
inline std::string kostka_table_dump(const std::vector<KostkaEntry>& table) {
  std::ostringstream out;
  for (const KostkaEntry& e : table)
    out << e.lambda.to_string() << " | " << e.mu.to_string() << " | " << to_fixture(e.polynomial) << "\n";
  return out.str();
}

inline void check_zero_weight(const std::array<int, 3>& lambda) {
  if (lambda[0] < lambda[1] || lambda[1] < lambda[2] || lambda[0] + lambda[1] + lambda[2] != 0)
    throw DomainError("lambda must satisfy lambda1 >= lambda2 >= lambda3 and sum to zero");
}

// q^{|lambda|^2/2} prod_{s<t} (1 - q^{lambda_s - lambda_t - s + t})
inline LaurentSeries weyl_numerator(const std::array<int, 3>& lambda, int scale = 1) {
  int e = 0;
  for (int x : lambda) e += x * x;
  LaurentSeries r = LaurentSeries::monomial(e / 2);
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t)
      r *= LaurentSeries::one_minus(scale * (lambda[static_cast<std::size_t>(s)] -
                                             lambda[static_cast<std::size_t>(t)] - s + t));
  return r;
}

// b_lambda(q) = q^{|lambda|^2/2} prod_{s<t}(1 - q^{lambda_s - lambda_t - s + t}) / (q)_oo^2
inline LaurentSeries branching_function(const std::array<int, 3>& lambda, int order) {
  check_zero_weight(lambda);
  const LaurentSeries inv = reciprocal_of_unit(infinite_product(qpow(1), 1, order), order);
  return multiply(multiply(weyl_numerator(lambda), inv, order), inv, order);
}

// The r-sum side sum_r q^{r C^{-1} r / 2} K_{eta mu}(q) / ((q)_{r1} (q)_{r2}) with
// mu = (2^{r2} 1^{r1}) and eta the conjugate of lambda + (r1 + 2r2)/3.
inline LaurentSeries branching_rsum(const std::array<int, 3>& lambda, int order) {
  check_zero_weight(lambda);
  LaurentSeries total;
  for (int r1 = 0; r1 * r1 <= 3 * order; ++r1)
    for (int r2 = 0; r2 * r2 <= 3 * order; ++r2) {
      if ((2 * r1 + r2) % 3 != 0) continue;
      const int e = (r1 * r1 + r1 * r2 + r2 * r2) / 3;
      if (e > order) continue;
      const int m = (r1 + 2 * r2) / 3;
      if (lambda[2] + m < 0) continue;
      const Partition shifted({lambda[0] + m, lambda[1] + m, lambda[2] + m});
      const LaurentSeries& k = kostka_from_supernomial(shifted, r1, r2);
      if (k.is_zero()) continue;
      total += multiply(multiply(k.shifted(e), reciprocal_qpoch(r1, order), order),
                        reciprocal_qpoch(r2, order), order);
    }
  return total.truncated(order);
}

}  // namespace qseries
