#include <gtest/gtest.h>

#include <limits>

#include "vircalc/rational.hpp"

using vircalc::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(4, -6), Rational(-2, 3));
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_THROW(Rational(1, 0), vircalc::Error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 2), Rational());
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(0).inverse(), vircalc::Error);
}

TEST(Rational, OverflowPromotesAndDemotes) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  EXPECT_EQ(sq.numerator_big(), Rational::BigInt(std::numeric_limits<std::int64_t>::max()) *
                                    std::numeric_limits<std::int64_t>::max());
  // Dividing back lands in the inline representation and compares equal.
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ((big + big) - big, big);
  EXPECT_LT(big, sq);
  EXPECT_EQ(Rational(std::numeric_limits<std::int64_t>::min()) + 1,
            Rational(std::numeric_limits<std::int64_t>::min() + 1));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse("1/x"), vircalc::Error);
  EXPECT_THROW(Rational::parse(""), vircalc::Error);
}

TEST(Rational, PowersAndFactorials) {
  EXPECT_EQ(vircalc::pow(Rational(1, 3), -2), Rational(9));
  EXPECT_EQ(vircalc::pow(Rational(2), 0), Rational(1));
  EXPECT_EQ(vircalc::factorial(5), Rational(120));
  EXPECT_EQ(vircalc::binomial(6, 2), Rational(15));
}
