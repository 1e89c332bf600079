#include <gtest/gtest.h>

#include "qseries/kostka.hpp"

using namespace qseries;

namespace {

LaurentSeries poly(std::vector<int> c, int lo = 0) {
  std::vector<Integer> v(c.begin(), c.end());
  return LaurentSeries::polynomial(lo, std::move(v));
}

// mu = (2^{L2} 1^{L1})
Partition two_one(int L1, int L2) { return Partition::from_multiplicities({L1, L2}); }

}  // namespace

TEST(Tableaux, Enumeration) {
  EXPECT_EQ(semistandard_tableaux(Partition({2, 1}), {1, 1, 1}).size(), 2u);
  EXPECT_EQ(semistandard_tableaux(Partition({3, 2}), {2, 2, 1}).size(), 2u);
  EXPECT_EQ(semistandard_tableaux(Partition({2, 2}), {1, 1, 1, 1}).size(), 2u);
  EXPECT_TRUE(semistandard_tableaux(Partition({1, 1}), {2}).empty());
  for (const Tableau& t : semistandard_tableaux(Partition({3, 2, 1}), {2, 2, 1, 1})) {
    EXPECT_TRUE(t.is_semistandard());
    EXPECT_EQ(t.shape(), Partition({3, 2, 1}));
    EXPECT_EQ(t.content(), (std::vector<int>{2, 2, 1, 1}));
  }
}

TEST(Tableaux, StandardCountsByHookLength) {
  // f^{(3,2)} = 5, f^{(3,2,1)} = 16, f^{(4,2,1)} = 35
  EXPECT_EQ(semistandard_tableaux(Partition({3, 2}), std::vector<int>(5, 1)).size(), 5u);
  EXPECT_EQ(semistandard_tableaux(Partition({3, 2, 1}), std::vector<int>(6, 1)).size(), 16u);
  EXPECT_EQ(semistandard_tableaux(Partition({4, 2, 1}), std::vector<int>(7, 1)).size(), 35u);
}

TEST(Charge, Words) {
  EXPECT_EQ(charge({1, 2}), 1);
  EXPECT_EQ(charge({2, 1}), 0);
  EXPECT_EQ(charge({1, 2, 3}), 3);
  EXPECT_EQ(charge({3, 2, 1}), 0);
  EXPECT_EQ(charge({1, 1, 2, 2}), 2);
}

TEST(Kostka, ChargeExamples) {
  EXPECT_TRUE(identical(kostka_charge(Partition({2}), Partition({1, 1})), poly({0, 1})));
  EXPECT_TRUE(identical(kostka_charge(Partition({1, 1}), Partition({1, 1})), poly({1})));
  EXPECT_TRUE(identical(kostka_charge(Partition({2, 1}), Partition({1, 1, 1})), poly({0, 1, 1})));
  EXPECT_TRUE(kostka_charge(Partition({1, 1}), Partition({2})).is_zero());
  EXPECT_THROW(kostka_charge(Partition({2}), Partition({1})), DomainError);
}

TEST(Kostka, KnownPolynomials) {
  // K_{(n),mu} = q^{n(mu)}, n(mu) = sum (i-1) mu_i
  EXPECT_TRUE(identical(kostka_charge(Partition({4}), Partition({2, 1, 1})), poly({0, 0, 0, 1})));
  // K_{lambda,(1^n)} = q^{n(lambda')} [n]! / prod of hook lengths
  EXPECT_TRUE(identical(kostka_charge(Partition({3, 1}), Partition({1, 1, 1, 1})), poly({0, 0, 0, 1, 1, 1})));
  EXPECT_TRUE(identical(kostka_charge(Partition({2, 1, 1}), Partition({1, 1, 1, 1})), poly({0, 1, 1, 1})));
  // K_{(2,2),(1^4)} = q^2 + q^4
  EXPECT_TRUE(identical(kostka_charge(Partition({2, 2}), Partition({1, 1, 1, 1})), poly({0, 0, 1, 0, 1})));
}

TEST(Kostka, RoutesAgree) {
  int checked = 0;
  for (int n = 1; n <= 8; ++n)
    for (int L2 = 0; 2 * L2 <= n; ++L2) {
      const int L1 = n - 2 * L2;
      const Partition mu = two_one(L1, L2);
      for (const Partition& lambda : partitions_of(n, INT_MAX, 3)) {
        const LaurentSeries a = kostka_charge(lambda.conjugate(), mu);
        const LaurentSeries b = kostka_from_supernomial(lambda, L1, L2);
        EXPECT_TRUE(identical(a, b)) << lambda.to_string() << " / " << mu.to_string();
        ++checked;
      }
    }
  EXPECT_GT(checked, 100);
}

TEST(Kostka, ValueAtOneIsTableauCount) {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        const LaurentSeries k = kostka_charge(lambda, mu);
        Integer at_one = 0;
        for (const Integer& c : k.coefficients()) {
          EXPECT_GE(c, 0);
          at_one += c;
        }
        EXPECT_EQ(at_one, kostka_number(lambda, mu.parts()));
      }
}

TEST(Kostka, DiagonalAndDominance) {
  for (const Partition& lambda : partitions_of(6)) {
    EXPECT_TRUE(identical(kostka_charge(lambda, lambda), poly({1})));
    for (const Partition& mu : partitions_of(6))
      if (!lambda.dominates(mu)) EXPECT_EQ(kostka_number(lambda, mu.parts()), 0);
  }
  // lambda' = (2,1,1) does not dominate mu = (2,2): the alternating sum cancels
  EXPECT_TRUE(kostka_from_supernomial(Partition({3, 1}), 0, 2).is_zero());
}

TEST(Kostka, TableDump) {
  const std::string dump = kostka_table_dump(kostka_table(2));
  EXPECT_EQ(dump, "2 | 2 | 0 0 1 1\n2 | 1 1 | 1 1 1 1\n1 1 | 1 1 | 0 0 1 1\n");
}

TEST(Branching, SumSideAgrees) {
  for (const std::array<int, 3>& lambda : std::vector<std::array<int, 3>>{
           {0, 0, 0}, {1, 0, -1}, {1, 1, -2}, {2, -1, -1}, {2, 0, -2}}) {
    const LaurentSeries a = branching_function(lambda, 20);
    const LaurentSeries b = branching_rsum(lambda, 20);
    EXPECT_EQ(a.order(), 20);
    EXPECT_TRUE(a == b) << lambda[0] << lambda[1] << lambda[2];
  }
  EXPECT_THROW(branching_function({1, 1, -1}, 5), DomainError);
  EXPECT_THROW(branching_function({0, 1, -1}, 5), DomainError);
}
