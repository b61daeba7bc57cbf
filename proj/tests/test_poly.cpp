#include <gtest/gtest.h>

#include "printers.hpp"

#include "blf/errors.hpp"
#include "blf/poly.hpp"
#include "blf/random.hpp"

using blf::Monomial;
using blf::Poly;
using blf::Rational;

namespace {

Poly P(const char* text) { return blf::parse_poly(text, 4); }

// Term-by-term product, one single-term multiplication at a time.
Poly schoolbook(const Poly& a, const Poly& b) {
  Poly out(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out += Poly::term(a.nvars(), ma * mb, ca * cb);
  }
  return out;
}

}  // namespace

TEST(Poly, DifferenceOfSquares) { EXPECT_EQ(P("x1 + x2") * P("x1 - x2"), P("x1^2 - x2^2")); }

TEST(Poly, AddZeroIsIdentity) {
  const Poly p = P("3*x1^2*x4 - 1/2*x3 + 7");
  EXPECT_EQ(p + Poly(4), p);
}

TEST(Poly, ScalarLinearity) {
  EXPECT_EQ(P("-x1^2 + x2^2 + x3^2") * Rational(1, 2), P("-1/2*x1^2 + 1/2*x2^2 + 1/2*x3^2"));
}

TEST(Poly, HomogeneousComponent) {
  EXPECT_EQ(blf::homogeneous_component(P("1 + x1 + x1*x2"), 2), P("x1*x2"));
  const Poly q2 = P("-x1^2 + x2^2 + x3^2");
  EXPECT_EQ(blf::homogeneous_component(q2, 2), q2);
  EXPECT_TRUE(blf::homogeneous_component(P("2*x1*x2 + 2*x3*x4"), 1).is_zero());
}

TEST(Poly, MonomialBasisSizes) {
  EXPECT_EQ(blf::monomial_basis(4, 0).size(), 1U);
  EXPECT_EQ(blf::monomial_basis(4, 0)[0], Monomial{});
  EXPECT_EQ(blf::monomial_basis(4, 1).size(), 4U);
  EXPECT_EQ(blf::monomial_basis(4, 6).size(), 84U);
  EXPECT_EQ(blf::monomial_basis(3, 5).size(), 21U);
}

TEST(Poly, MonomialBasisIsDescendingAndHomogeneous) {
  const auto basis = blf::monomial_basis(4, 4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_EQ(basis[i].degree(), 4);
    if (i > 0) {
      EXPECT_GT(basis[i - 1], basis[i]);
    }
  }
}

TEST(Poly, VariableCountMismatchThrows) {
  EXPECT_THROW(Poly(3) + Poly(4), blf::DimensionError);
  EXPECT_THROW(Poly::variable(3, 0) * Poly::variable(4, 0), blf::DimensionError);
}

TEST(Poly, DerivativeAndPower) {
  EXPECT_EQ(P("x1^3*x2 - 5*x2^2 + x4").derivative(1), P("x1^3 - 10*x2"));
  EXPECT_EQ(P("x1 + x2").pow(3), P("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3"));
  EXPECT_EQ(P("x3").pow(0), P("1"));
}

TEST(Poly, ProductAgreesWithSchoolbook) {
  blf::RandomSource rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = rng.poly(4, 1 + trial % 5);
    Poly b = rng.poly(4, 1 + (trial / 5) % 5);
    if (trial % 4 == 0) a *= Rational(1, 3 + trial);
    if (trial % 7 == 0) b *= Rational(-2, 9);
    EXPECT_EQ(a * b, schoolbook(a, b));
  }
}

TEST(Poly, ProductWithLargeCoefficientsStaysExact) {
  const Poly big = Poly::constant(4, blf::parse_rational("100000000000000000000")) + P("x1 + x2 + x3 + x4").pow(4);
  const Poly a = big * big;
  EXPECT_EQ(a, schoolbook(big, big));
  EXPECT_EQ(a.constant_term(), blf::parse_rational("10000000000000000000000000000000000000000"));
}

TEST(Poly, ParseAndPrintRoundTrip) {
  const Poly p = P("-1/4*x1^2*x3 + 2*x2 - 7/3");
  EXPECT_EQ(blf::parse_poly(blf::to_string(p), 4), p);
  EXPECT_EQ(blf::to_string(Poly(4)), "0");
  EXPECT_THROW(P("x9"), blf::ParseError);
}

TEST(Poly, ReflectAndRemap) {
  const bool flip[4] = {true, false, true, false};
  EXPECT_EQ(P("x1*x2 + x3^2 + x3").reflect(flip), P("-x1*x2 + x3^2 - x3"));
  const int target[3] = {1, 2, 3};
  EXPECT_EQ(blf::parse_poly("x1*x3", 3).remap(4, target), P("x2*x4"));
}
