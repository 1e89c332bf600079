#include <gtest/gtest.h>

#include "qseries/hypergeometric.hpp"
#include "qseries/qbinomial.hpp"

using namespace qseries;

namespace {

using Params = std::map<std::string, int>;

// Runs every parameter tuple on the grid, skipping tuples that hit a pole.
int check_grid(ClassicalId id, const std::vector<Params>& grid) {
  int checked = 0;
  for (const Params& p : grid) {
    try {
      const ClassicalSides s = classical_identity_sides(id, p);
      EXPECT_TRUE(s.lhs == s.rhs) << classical_identities()[static_cast<std::size_t>(id)].name;
      ++checked;
    } catch (const PoleError&) {
    }
  }
  return checked;
}

std::vector<Params> grid(const std::vector<std::string>& names, int lo, int hi, int n_max) {
  std::vector<Params> out;
  std::vector<int> v(names.size(), lo);
  for (;;) {
    Params p;
    for (std::size_t i = 0; i < names.size(); ++i) p[names[i]] = v[i];
    if (p["n"] >= 0 && p["n"] <= n_max) out.push_back(p);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] > (names[i] == "n" ? n_max : hi)) v[i++] = lo;
    if (i == v.size()) break;
  }
  return out;
}

}  // namespace

TEST(Phi, TerminatingBinomialTheorem) {
  // 1phi0[q^-n; -; z] = (z q^-n)_n
  for (int n = 0; n <= 5; ++n) {
    const RationalFunction s = phi({hp(-n)}, {}, qpow(2), n);
    EXPECT_TRUE(s == RationalFunction::poch(qpow(2 - n), n)) << n;
  }
}

TEST(Phi, ZeroParameter) {
  // 1phi1[q^-n; 0; z] against the direct sum
  const int n = 3;
  RationalFunction direct;
  for (int k = 0; k <= n; ++k) {
    const Monomial g{k % 2 == 0 ? 1 : -1, k * (k - 1) / 2 + k};
    direct += (RationalFunction::poch(qpow(-n), k) * RationalFunction::reciprocal_qpoch(k)).times(g);
  }
  EXPECT_TRUE(phi({hp(-n)}, {kZeroParam}, qpow(1), n) == direct);
}

TEST(Classical, ChuVandermonde) {
  EXPECT_GE(check_grid(ClassicalId::qCV1, grid({"n", "b", "c"}, -3, 4, 5)), 100);
  EXPECT_GE(check_grid(ClassicalId::qCV2, grid({"n", "b", "c"}, -3, 4, 5)), 100);
  Params neg{{"n", 3}, {"b", 2}, {"b_sign", -1}, {"c", 3}};
  EXPECT_TRUE(verify_classical_identity(ClassicalId::qCV1, neg));
  EXPECT_TRUE(verify_classical_identity(ClassicalId::qCV2, neg));
}

TEST(Classical, Sears) {
  const auto g = grid({"n", "b", "c", "d", "e"}, -1, 3, 3);
  EXPECT_GE(check_grid(ClassicalId::SearsIII11, g), 50);
  EXPECT_GE(check_grid(ClassicalId::SearsIII9, g), 50);
}

TEST(Classical, Jackson) {
  EXPECT_GE(check_grid(ClassicalId::JacksonIII7, grid({"n", "b", "c", "z"}, -2, 3, 4)), 50);
  EXPECT_GE(check_grid(ClassicalId::Jackson2, grid({"n", "c", "z"}, -3, 4, 5)), 50);
}

TEST(Classical, WatsonLimit) {
  int checked = 0;
  for (int a : {0, 1})
    for (int n = 0; n <= 5; ++n)
      for (int e = -3; e <= 4; ++e)
        checked += check_grid(ClassicalId::WatsonLimit, {{{"n", n}, {"a", a}, {"e", e}}});
  EXPECT_GE(checked, 40);
  EXPECT_THROW(classical_identity_sides(ClassicalId::WatsonLimit, {{"n", 2}, {"a", 2}, {"e", 1}}), DomainError);
}

TEST(Classical, SimultaneousSum) {
  for (int s : {0, 1})
    for (int A = 0; A <= 4; ++A)
      for (int B = 0; B <= 4; ++B)
        EXPECT_TRUE(verify_classical_identity(ClassicalId::Sim, {{"A", A}, {"B", B}, {"sigma", s}}));
}

TEST(Classical, KernelSums) {
  for (ClassicalId id : {ClassicalId::Sum1, ClassicalId::Sum2})
    for (int ell = 0; ell <= 2; ++ell)
      for (int k1 = -3; k1 <= 3; ++k1)
        for (int k2 = -3; k2 <= k1; ++k2) {
          if (k2 < -k1 - k2) continue;
          for (int M1 = 0; M1 <= 3; ++M1)
            for (int M2 = 0; M2 <= 3; ++M2)
              EXPECT_TRUE(verify_classical_identity(
                  id, {{"M1", M1}, {"M2", M2}, {"k1", k1}, {"k2", k2}, {"ell", ell}}))
                  << M1 << M2 << " k=" << k1 << "," << k2 << " ell=" << ell;
        }
  EXPECT_THROW(classical_identity_sides(ClassicalId::Sum1, {{"M1", 1}, {"M2", 1}, {"k1", -1}, {"k2", 1}, {"ell", 0}}),
               DomainError);
}

TEST(Classical, DetectsWrongSides) {
  // qCV1 and qCV2 have different arguments; swapping right sides must fail
  const Params p{{"n", 2}, {"b", 1}, {"c", 3}};
  const ClassicalSides a = classical_identity_sides(ClassicalId::qCV1, p);
  const ClassicalSides b = classical_identity_sides(ClassicalId::qCV2, p);
  EXPECT_FALSE(a.lhs == b.rhs);
  EXPECT_THROW(classical_identity_sides(ClassicalId::qCV1, {{"n", 2}}), DomainError);
  EXPECT_THROW(classical_id_from_name("nope"), DomainError);
  EXPECT_EQ(classical_id_from_name("Sears-III.9"), ClassicalId::SearsIII9);
}
