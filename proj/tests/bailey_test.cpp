#include <gtest/gtest.h>

#include "qseries/bailey_a1.hpp"
#include "qseries/bailey_a2.hpp"
#include "qseries/qbinomial.hpp"

using namespace qseries;

namespace {

RationalFunction rf(const LaurentSeries& s) { return RationalFunction(s); }

}  // namespace

TEST(RationalFunction, ArithmeticAndReduction) {
  const RationalFunction x = RationalFunction::inverse_factor(qpow(1));
  const RationalFunction y = RationalFunction::inverse_factor(qpow(2));
  // 1/(1-q) - 1/(1-q^2) = q/(1-q^2)
  const RationalFunction d = x - y;
  EXPECT_TRUE(d == y.shifted(1));
  // (1-q^2)/(1-q) reduces to 1+q
  const RationalFunction r = rf(LaurentSeries::one_minus(2)) * x;
  auto poly = r.as_polynomial();
  ASSERT_TRUE(poly.has_value());
  EXPECT_TRUE(identical(*poly, LaurentSeries::polynomial(0, {Integer(1), Integer(1)})));
  EXPECT_TRUE((x - x).is_zero());
}

TEST(RationalFunction, NegativeExponentFactors) {
  // 1/(1 - q^{-1}) = -q/(1 - q)
  const RationalFunction a = RationalFunction::inverse_factor(qpow(-1));
  EXPECT_TRUE(a == -RationalFunction::inverse_factor(qpow(1)).shifted(1));
  const RationalFunction b = RationalFunction::inverse_factor({-1, -2});
  EXPECT_TRUE(b == RationalFunction::inverse_factor({-1, 2}).shifted(2));
}

TEST(RationalFunction, PochhammerConventions) {
  EXPECT_TRUE(RationalFunction::reciprocal_qpoch(-3).is_zero());
  EXPECT_TRUE(RationalFunction::poch(qpow(2), -1) == RationalFunction::inverse_factor(qpow(1)));
  EXPECT_THROW(RationalFunction::poch(qpow(1), -1), PoleError);
  EXPECT_THROW(RationalFunction::reciprocal_poch(qpow(-2), 4), PoleError);
  // (a)_n (a q^n)_m = (a)_{n+m} with negative n
  for (int n = -3; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const Monomial a{1, 5};
      EXPECT_TRUE(RationalFunction::poch(a, n) * RationalFunction::poch(a.times_q(n), m) ==
                  RationalFunction::poch(a, n + m));
    }
}

TEST(RationalFunction, SeriesExpansion) {
  const RationalFunction r = RationalFunction::reciprocal_qpoch(3).shifted(-2);
  const LaurentSeries s = r.series(10);
  EXPECT_EQ(s.order(), 10);
  EXPECT_TRUE(multiply(s, qpoch(3), 10) == LaurentSeries::monomial(-2).truncated(10));
}

TEST(BaileyA1, UnitPairs) {
  for (int ell : {0, 1}) {
    const BaileyPairA1 p = unit_a1_pair(ell, 10);
    EXPECT_TRUE(verify_a1_pair(p, 10).ok) << ell;
  }
  EXPECT_THROW(unit_a1_pair(2, 3), DomainError);
}

TEST(BaileyA1, CorruptedPairLocated) {
  BaileyPairA1 p = unit_a1_pair(0, 6);
  p.beta[0] = rf(LaurentSeries::monomial(1));
  const PairCheck c = verify_a1_pair(p, 6);
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.failed_at.has_value());
  EXPECT_EQ(*c.failed_at, 0);

  BaileyPairA1 p2 = unit_a1_pair(1, 6);
  p2.alpha[4] = p2.alpha[4].shifted(1);
  EXPECT_EQ(verify_a1_pair(p2, 6).failed_at, 4);
}

TEST(BaileyA1, LemmaPreservesPairs) {
  const std::vector<std::pair<RhoParam, RhoParam>> params = {
      {RhoParam::infinity(), RhoParam::infinity()},
      {RhoParam::monomial(-1), RhoParam::monomial(0, -1)},
      {RhoParam::monomial(-2), RhoParam::infinity()},
      {RhoParam::infinity(), RhoParam::monomial(-2, -1)},
      {RhoParam::monomial(-1, -1), RhoParam::monomial(-3)},
  };
  for (int ell : {0, 1}) {
    const BaileyPairA1 p = unit_a1_pair(ell, 10);
    for (const auto& [r1, r2] : params) {
      if ((!r1.infinite && r1.value.sign > 0 && r1.value.exponent == ell + 1) ||
          (!r2.infinite && r2.value.sign > 0 && r2.value.exponent == ell + 1))
        continue;
      const BaileyPairA1 t = transform_a1(p, r1, r2);
      EXPECT_TRUE(verify_a1_pair(t, 10).ok);
      EXPECT_TRUE(verify_a1_pair(transform_a1_limit(t), 10).ok);
    }
  }
}

TEST(BaileyA1, PoleIsReported) {
  const BaileyPairA1 p = unit_a1_pair(0, 4);
  EXPECT_THROW(transform_a1(p, RhoParam::monomial(2), RhoParam::infinity()), PoleError);
  EXPECT_THROW(transform_a1(p, RhoParam::infinity(), RhoParam::monomial(1)), PoleError);
  // aq/rho = q^{-3} reaches q^0 only at L = 4
  EXPECT_NO_THROW(transform_a1(unit_a1_pair(0, 3), RhoParam::monomial(4), RhoParam::infinity()));
  EXPECT_THROW(transform_a1(unit_a1_pair(0, 4), RhoParam::monomial(4), RhoParam::infinity()), PoleError);
}

TEST(BaileyA1, RogersRamanujanLimit) {
  const int order = 50;
  const BaileyPairA1 p = transform_a1_limit(transform_a1_limit(unit_a1_pair(0, 7)));
  const LaurentSeries lim = a1_alpha_limit(p, order);
  // times (q)_oo it is prod 1/((q;q^5)(q^4;q^5))
  const LaurentSeries g = multiply(lim, infinite_product(qpow(1), 1, order), order);
  const LaurentSeries prod = reciprocal_of_unit(
      multiply(infinite_product(qpow(1), 5, order), infinite_product(qpow(4), 5, order), order), order);
  EXPECT_TRUE(g == prod);
  LaurentSeries sum = LaurentSeries::zero_to_order(order);
  for (int r = 0; r * r <= order; ++r) sum += reciprocal_qpoch(r, order).shifted(r * r).truncated(order);
  EXPECT_TRUE(g == sum);
  EXPECT_THROW(a1_alpha_limit(p, 200), DomainError);
}

TEST(BaileyA1, AltIdentity) {
  {
    const auto [l, r] = alt_identity_sides(3, 0);
    EXPECT_TRUE(l.is_zero());
    EXPECT_TRUE(identical(l, r));
  }
  {
    const auto [l, r] = alt_identity_sides(0, 2);
    EXPECT_TRUE(identical(r, qpoch(2)));
    EXPECT_TRUE(identical(l, r));
  }
  for (int ell = 0; ell <= 6; ++ell)
    for (int L = -(ell / 2); L <= 5; ++L) {
      const auto [l, r] = alt_identity_sides(L, ell);
      EXPECT_TRUE(identical(l, r)) << L << " " << ell;
    }
  EXPECT_FALSE(alt_identity_sides(-1, 3).first.is_zero());
  EXPECT_THROW(alt_identity_sides(-2, 3), DomainError);
}

TEST(BaileyA2, SeedPairVerifies) {
  const BaileyPairA2 p = superid_seed_pair(6);
  EXPECT_TRUE(verify_a2_pair(p, 6).ok);
  for (const auto& [k, a] : p.alpha) EXPECT_TRUE(is_triangular(k));
}

TEST(BaileyA2, TransformMatchesBinomials) {
  const BaileyPairA2 p = transform_a2(superid_seed_pair(5));
  EXPECT_EQ(p.type, PairType::II);
  EXPECT_TRUE(verify_a2_pair(p, 5).ok);
  for (int L1 = 0; L1 <= 5; ++L1)
    for (int L2 = 0; L1 + L2 <= 5; ++L2) {
      const RationalFunction lhs = p.beta_at(L1, L2) * rf(qpoch(L1 + L2)) * rf(qpoch(L1 + L2));
      EXPECT_TRUE(lhs == rf(qbinomial(L1 + L2, L1))) << L1 << "," << L2;
    }
  const BaileyPairA2 p2 = transform_a2(p);
  EXPECT_TRUE(verify_a2_pair(p2, 5).ok);
}

TEST(BaileyA2, CorruptedBetaLocated) {
  BaileyPairA2 p = superid_seed_pair(4);
  p.beta[{1, 2}] = rf(LaurentSeries::one());
  const PairCheckA2 c = verify_a2_pair(p, 4);
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.failed_at.has_value());
  EXPECT_EQ(*c.failed_at, (Index2{1, 2}));
  EXPECT_THROW(verify_a2_pair(p, 5), DomainError);
}

TEST(BaileyA2, KernelBasics) {
  // type II kernel at L = 0 is 1/((q)_{k3}(q)_{-k1}(q)_{-k2}(aq)_{k1}(aq)_{k2}(aq)_{-k3})
  EXPECT_TRUE(kernel_type2(0, 0, 0, {0, 0, 0}) == rf(LaurentSeries::one()));
  EXPECT_TRUE(kernel_type2(0, 0, 0, {1, 0, -1}).is_zero());
  EXPECT_TRUE(kernel_type1(0, 0, 0, {0, 0, 0}) == rf(LaurentSeries::one()));
  EXPECT_TRUE(kernel_type1(1, 3, 1, {0, 0, 0}).is_zero());
}
