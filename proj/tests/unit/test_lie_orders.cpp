#include <cmath>
#include <gtest/gtest.h>

#include "group_oracles.hpp"
#include "systole/errors.hpp"
#include "systole/exact.hpp"
#include "systole/lie_orders.hpp"

using namespace systole;

namespace {

const LieFamily kFamilies[] = {LieFamily::SplitA, LieFamily::TwistedA, LieFamily::BC, LieFamily::SplitD,
                               LieFamily::TwistedD};

int max_rank(LieFamily family) { return family == LieFamily::SplitA || family == LieFamily::TwistedA ? 6 : 5; }

}  // namespace

TEST(GroupOrder, SplitA1MatchesEnumeratedSL2) {
  for (int p : {2, 3, 5, 7}) {
    EXPECT_EQ(group_order(LieType::make(LieFamily::SplitA, 1), p),
              ExactInteger(std::to_string(oracle::count_special_linear(oracle::PrimeField{p}, 2))))
        << "q = " << p;
  }
  EXPECT_EQ(group_order(LieType::make(LieFamily::SplitA, 1), 4),
            ExactInteger(std::to_string(oracle::count_special_linear(oracle::F4{}, 2))));
}

TEST(GroupOrder, SplitA2MatchesEnumeratedSL3) {
  EXPECT_EQ(oracle::count_special_linear(oracle::PrimeField{2}, 3), 168u);
  EXPECT_EQ(group_order(LieType::make(LieFamily::SplitA, 2), 2), 168);
  EXPECT_EQ(group_order(LieType::make(LieFamily::SplitA, 2), 3),
            ExactInteger(std::to_string(oracle::count_special_linear(oracle::PrimeField{3}, 3))));
}

TEST(GroupOrder, TwistedA2MatchesEnumeratedSU3OverF4) {
  EXPECT_EQ(oracle::count_special_unitary_3_f4(), 216u);
  EXPECT_EQ(group_order(LieType::make(LieFamily::TwistedA, 2), 2), 216);
}

TEST(GroupOrder, BC2MatchesEnumeratedSp4) {
  EXPECT_EQ(oracle::count_symplectic_4_f2(), 720u);
  EXPECT_EQ(group_order(LieType::make(LieFamily::BC, 2), 2), 720);
}

TEST(GroupOrder, TableExamples) {
  EXPECT_EQ(group_order(LieType::make(LieFamily::SplitA, 1), 2), 6);
  EXPECT_EQ(group_order(LieType::make(LieFamily::SplitA, 1), 3), 24);
  // SU_3(3) = 3^3 (3^2 - 1)(3^3 + 1)
  EXPECT_EQ(group_order(LieType::make(LieFamily::TwistedA, 2), 3), 6048);
  // Sp_6(2)
  EXPECT_EQ(group_order(LieType::make(LieFamily::BC, 3), 2), 1451520);
  // Omega+_8(2) and Omega-_8(2)
  EXPECT_EQ(group_order(LieType::make(LieFamily::SplitD, 4), 2), 174182400);
  EXPECT_EQ(group_order(LieType::make(LieFamily::TwistedD, 4), 2), 197406720);
}

TEST(GroupOrder, TwistedFactorSignAlternates) {
  // The j = 1 factor is q^2 - 1 and the j = 2 factor q^3 + 1. The other sign
  // reading would give 8 * 5 * 7 = 280 at q = 2.
  EXPECT_NE(group_order(LieType::make(LieFamily::TwistedA, 2), 2), 280);
  // SU_4(2) = 2^6 (2^2 - 1)(2^3 + 1)(2^4 - 1)
  EXPECT_EQ(group_order(LieType::make(LieFamily::TwistedA, 3), 2), 25920);
}

TEST(GroupOrder, RejectsBadArguments) {
  EXPECT_THROW(LieType::make(LieFamily::SplitA, 0), DomainError);
  EXPECT_THROW(LieType::make(LieFamily::TwistedA, 1), DomainError);
  EXPECT_THROW(LieType::make(LieFamily::BC, 1), DomainError);
  EXPECT_THROW(LieType::make(LieFamily::SplitD, 3), DomainError);
  EXPECT_THROW(LieType::make(LieFamily::TwistedD, 3), DomainError);
  EXPECT_THROW(group_order(LieType::make(LieFamily::SplitA, 1), ExactInteger(1)), DomainError);
  EXPECT_THROW(group_order(LieType::synthetic(LieFamily::TwistedD, 2), 3), DomainError);
}

TEST(GroupOrder, NonPrimePowerStillEvaluatesPolynomial) {
  // 6^1 (6^2 - 1)
  EXPECT_EQ(group_order(LieType::make(LieFamily::SplitA, 1), 6), 210);
}

TEST(GroupOrder, StrictlyIncreasingInQ) {
  for (LieFamily family : kFamilies) {
    for (int r = min_rank(family); r <= max_rank(family); ++r) {
      const LieType type = LieType::make(family, r);
      ExactInteger previous = 0;
      for (std::uint64_t q = 2; q <= 32; ++q) {
        const ExactInteger order = group_order(type, q);
        EXPECT_GT(order, previous) << type.label() << " q=" << q;
        previous = order;
      }
    }
  }
}

TEST(GroupOrder, ExactForLargeArguments) {
  // Stays exact far beyond 64 bits: compare against a direct product.
  const ExactInteger q("1000000007");
  const ExactInteger order = group_order(LieType::make(LieFamily::SplitA, 3), q);
  ExactInteger expected = pow(q, 6);
  for (unsigned long j = 2; j <= 4; ++j) expected *= pow(q, j) - 1;
  EXPECT_EQ(order, expected);
}

TEST(DimensionExponent, Examples) {
  EXPECT_EQ(dimension_exponent(LieType::make(LieFamily::TwistedA, 2)), 8);
  EXPECT_EQ(dimension_exponent(LieType::make(LieFamily::TwistedD, 4)), 28);
  EXPECT_EQ(dimension_exponent(LieType::make(LieFamily::BC, 2)), 10);
  EXPECT_EQ(dimension_exponent(LieType::make(LieFamily::SplitA, 1)), 3);
  EXPECT_EQ(dimension_exponent(LieType::make(LieFamily::SplitD, 5)), 45);
  EXPECT_EQ(dimension_exponent(LieType::synthetic(LieFamily::TwistedD, 2)), 6);
}

TEST(DimensionExponent, BoundsOrderForEveryTypeAndQ) {
  for (LieFamily family : kFamilies) {
    for (int r = min_rank(family); r <= max_rank(family); ++r) {
      const LieType type = LieType::make(family, r);
      const auto e = static_cast<unsigned long>(dimension_exponent(type));
      for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
        EXPECT_LE(group_order(type, q), pow(ExactInteger(q), e)) << type.label() << " q=" << q;
      }
    }
  }
}

TEST(OrderVsExponentCheck, Examples) {
  EXPECT_TRUE(order_vs_exponent_check(LieType::make(LieFamily::TwistedA, 2), 9));
  EXPECT_TRUE(order_vs_exponent_check(LieType::make(LieFamily::TwistedD, 4), 5));
  EXPECT_TRUE(order_vs_exponent_check(LieType::make(LieFamily::SplitA, 1), 2));
  EXPECT_THROW(order_vs_exponent_check(LieType::make(LieFamily::SplitA, 1), 1), DomainError);
}

TEST(LieTypeLabel, Format) {
  EXPECT_EQ(LieType::make(LieFamily::SplitA, 3).label(), "1A_3");
  EXPECT_EQ(LieType::make(LieFamily::TwistedD, 4).label(), "2D_4");
  EXPECT_EQ(LieType::make(LieFamily::BC, 2).label(), "BC_2");
}

TEST(Exact, PrimePowerRecognition) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 1024}) EXPECT_TRUE(is_prime_power(q)) << q;
  for (std::uint64_t q : {0, 1, 6, 10, 12, 15, 18, 100}) EXPECT_FALSE(is_prime_power(q)) << q;
}

TEST(Exact, BinomialAndLog) {
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(16, 8), 12870u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_NEAR(log(ExactInteger(1000)), std::log(1000.0), 1e-12);
  const ExactInteger huge = pow(ExactInteger(10), 400);
  EXPECT_NEAR(log(huge), 400 * std::log(10.0), 1e-9);
}
