#include <gtest/gtest.h>

#include "printers.hpp"

#include "blf/calc4.hpp"
#include "blf/checks.hpp"
#include "blf/errors.hpp"
#include "blf/models.hpp"
#include "blf/random.hpp"

using namespace blf::calc4;
using blf::Poly;
using blf::Rational;

namespace {

Poly P(const char* text) { return blf::parse_poly(text, 4); }

template <class T>
T ints(std::initializer_list<int> v) {
  T t;
  std::size_t i = 0;
  for (int x : v) t[i++] = Poly::constant(4, x);
  return t;
}

Tuple4 random4(blf::RandomSource& rng, int d) {
  Tuple4 t;
  for (std::size_t i = 0; i < 4; ++i) t[i] = rng.poly(4, d);
  return t;
}

CrossTuple6 random6(blf::RandomSource& rng, int d) {
  CrossTuple6 t;
  for (std::size_t i = 0; i < 6; ++i) t[i] = rng.poly(4, d);
  return t;
}

}  // namespace

TEST(Calc4, Gradient) {
  EXPECT_EQ(grad(P("x1*x2")), Tuple4({P("x2"), P("x1"), P("0"), P("0")}));
  EXPECT_EQ(grad(blf::lefschetz_p1()), Tuple4({P("2*x1"), P("-2*x2"), P("2*x3"), P("-2*x4")}));
  EXPECT_TRUE(grad(P("7")).is_zero());
  EXPECT_THROW(grad(blf::parse_poly("x1", 3)), blf::DimensionError);
}

TEST(Calc4, Divergence) {
  EXPECT_EQ(div(to_tuple4(blf::euler_field(4))), P("4"));
  EXPECT_TRUE(div(grad(blf::lefschetz_p2())).is_zero());
  EXPECT_TRUE(div(ints<Tuple4>({1, 2, 3, 4})).is_zero());
}

TEST(Calc4, Cross) {
  EXPECT_EQ(cross(Tuple4::unit(0), Tuple4::unit(3)), CrossTuple6::unit(0));
  blf::RandomSource rng(1);
  const Tuple4 x = random4(rng, 2);
  EXPECT_TRUE(cross(x, x).is_zero());
  const CrossTuple6 c = cross(grad(blf::lefschetz_p1()), grad(blf::lefschetz_p2()));
  EXPECT_EQ(c[0], P("4*x1*x3 + 4*x2*x4"));
}

TEST(Calc4, BarCross) {
  EXPECT_EQ(barcross(Tuple4::unit(0), CrossTuple6::unit(3)), ints<Tuple4>({0, -1, 0, 0}));
  EXPECT_TRUE(barcross(Tuple4{}, CrossTuple6::unit(2)).is_zero());
  const CrossTuple6 j = cross(grad(blf::lefschetz_p1()), grad(blf::lefschetz_p2()));
  EXPECT_TRUE(barcross(grad(blf::lefschetz_p1()), j).is_zero());
  EXPECT_TRUE(barcross(grad(blf::lefschetz_p2()), j).is_zero());
}

TEST(Calc4, ConstantMatrices) {
  EXPECT_EQ(hodge2(CrossTuple6::unit(0)), ints<CrossTuple6>({0, 0, -1, 0, 0, 0}));
  EXPECT_EQ(hodge2(CrossTuple6::unit(4)), ints<CrossTuple6>({0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(apply_phi(CrossTuple6::unit(1)), ints<CrossTuple6>({0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(apply_D(Tuple4::unit(0)), ints<Tuple4>({0, 0, 0, -1}));
  EXPECT_EQ(apply_D(Tuple4::unit(3)), ints<Tuple4>({1, 0, 0, 0}));
  EXPECT_EQ(apply_K(Tuple6::unit(0)), ints<CrossTuple6>({0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(apply_K(Tuple6::unit(2)), ints<CrossTuple6>({0, 0, -1, 0, 0, 0}));

  blf::RandomSource rng(2);
  const CrossTuple6 y = random6(rng, 2);
  const Tuple4 x = random4(rng, 2);
  EXPECT_EQ(hodge2(hodge2(y)), y);
  EXPECT_EQ(apply_phi(apply_phi(y)), y);
  EXPECT_EQ(apply_D(apply_D(x)), -x);
  EXPECT_EQ(apply_K_inv(apply_K(to_wedge_order(y))), to_wedge_order(y));
  EXPECT_EQ(apply_K(apply_K_inv(y)), y);
}

TEST(Calc4, NablaExamples) {
  EXPECT_TRUE(nabla_cross(grad(P("x1^2*x3"))).is_zero());
  EXPECT_TRUE(nabla_barcross(cross(grad(blf::lefschetz_p1()), grad(blf::lefschetz_p2()))).is_zero());
  blf::RandomSource rng(3);
  const Tuple4 x = random4(rng, 3);
  EXPECT_EQ(nabla_cross(Rational(-5, 2) * x), Rational(-5, 2) * nabla_cross(x));
}

TEST(Calc4, Boxtimes) {
  std::array<CrossTuple6, 4> zero;
  EXPECT_TRUE(boxtimes(zero, CrossTuple6::unit(2)).is_zero());
  blf::RandomSource rng(4);
  std::array<CrossTuple6, 4> jets;
  for (auto& j : jets) j = random6(rng, 1);
  const Tuple4 first = boxtimes(jets, CrossTuple6::unit(0));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(first[i], jets[i][0]);
}

TEST(Calc4, CrossMatchesWedgeThroughReindex) {
  blf::RandomSource rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Tuple4 x = random4(rng, 2);
    const Tuple4 y = random4(rng, 2);
    EXPECT_EQ(to_wedge_order(cross(x, y)), to_tuple6(blf::wedge(vector_field(x), vector_field(y))));
    EXPECT_EQ(to_cross_order(to_wedge_order(cross(x, y))), cross(x, y));
  }
}

TEST(Calc4, EncodingsRoundTrip) {
  blf::RandomSource rng(6);
  const blf::MVec b = rng.mvec(4, 2, 2);
  const blf::MVec t = rng.mvec(4, 3, 2);
  EXPECT_EQ(bivector_field(to_tuple6(b)), b);
  EXPECT_EQ(trivector_field(to_tuple4(t)), t);
  EXPECT_THROW(to_tuple6(t), blf::DimensionError);
}

TEST(Calc4, IdentitySuitesHold) {
  const auto results = blf::identity_suites(20, 9);
  ASSERT_EQ(results.size(), 13U);
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.name << ": " << r.details;
}
