#include <gtest/gtest.h>

#include "printers.hpp"

#include <limits>
#include <random>

#include "blf/errors.hpp"
#include "blf/rational.hpp"

using blf::Integer;
using blf::Rational;

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

mpq_class gmp(const Rational& q) { return q.to_mpq(); }

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational q(6, -4);
  EXPECT_EQ(q.small_num(), -3);
  EXPECT_EQ(q.small_den(), 2);
  EXPECT_EQ(blf::to_string(q), "-3/2");
  EXPECT_EQ(blf::to_string(Rational(0, 7)), "0/1");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowPromotesAndDemotes) {
  Rational big(kMax);
  big += 1;
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.numerator(), Integer(kMax) + 1);
  big -= 1;
  EXPECT_TRUE(big.is_small());
  EXPECT_EQ(big, Rational(kMax));

  const Rational low(kMin);
  EXPECT_FALSE(low.is_small());
  EXPECT_EQ(-low, Rational(Integer(Integer(kMax) + 1)));

  Rational sq(kMax);
  sq *= Rational(kMax);
  EXPECT_EQ(gmp(sq), mpq_class(Integer(kMax) * Integer(kMax)));
  sq /= Rational(kMax);
  EXPECT_TRUE(sq.is_small());
}

TEST(Rational, ArithmeticAgreesWithGmp) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> wide(kMin / 2, kMax / 2);
  std::uniform_int_distribution<std::int64_t> narrow(-50, 50);
  for (int trial = 0; trial < 2000; ++trial) {
    auto draw = [&]() {
      const bool large = trial % 3 == 0;
      std::int64_t d = large ? wide(rng) : narrow(rng);
      if (d == 0) d = 1;
      return Rational(large ? wide(rng) : narrow(rng), d);
    };
    const Rational a = draw();
    const Rational b = draw();
    const mpq_class ga = gmp(a);
    const mpq_class gb = gmp(b);
    EXPECT_EQ(gmp(a + b), mpq_class(ga + gb));
    EXPECT_EQ(gmp(a - b), mpq_class(ga - gb));
    EXPECT_EQ(gmp(a * b), mpq_class(ga * gb));
    if (!b.is_zero()) {
      EXPECT_EQ(gmp(a / b), mpq_class(ga / gb));
    }
    EXPECT_EQ(a < b, ga < gb);
    EXPECT_EQ(a == b, ga == gb);
    const Rational chained = (a * b + a) * b - b;
    EXPECT_EQ(gmp(chained), mpq_class((ga * gb + ga) * gb - gb));
  }
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(3) / Rational(0), std::domain_error); }

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(blf::parse_rational("-1/4"), Rational(-1, 4));
  EXPECT_EQ(blf::parse_rational("+8/6"), Rational(4, 3));
  EXPECT_EQ(blf::parse_rational("12"), Rational(12));
  const Rational huge = blf::parse_rational("123456789012345678901234567890/7");
  EXPECT_FALSE(huge.is_small());
  EXPECT_EQ(blf::parse_rational(blf::to_string(huge)), huge);
  EXPECT_THROW(blf::parse_rational("1/0"), blf::ParseError);
  EXPECT_THROW(blf::parse_rational("x"), blf::ParseError);
  EXPECT_THROW(blf::parse_rational("1/-2"), blf::ParseError);
}
