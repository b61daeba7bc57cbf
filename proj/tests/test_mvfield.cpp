#include <gtest/gtest.h>

#include "printers.hpp"

#include "blf/errors.hpp"
#include "blf/models.hpp"
#include "blf/mvfield.hpp"
#include "blf/random.hpp"

using blf::MVec;
using blf::Poly;

namespace {

Poly P(const char* text) { return blf::parse_poly(text, 4); }

MVec field(std::initializer_list<const char*> coeffs) {
  std::vector<Poly> c;
  for (const char* t : coeffs) c.push_back(P(t));
  return MVec(4, 1, c);
}

unsigned bits(std::initializer_list<int> idx) {
  unsigned m = 0;
  for (int i : idx) m |= 1U << static_cast<unsigned>(i);
  return m;
}

// [X, Y]_j = X(Y_j) - Y(X_j).
MVec lie_bracket(const MVec& x, const MVec& y) {
  MVec out(4, 1);
  for (std::size_t j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      out[j] += x[static_cast<std::size_t>(i)] * y[j].derivative(i);
      out[j] -= y[static_cast<std::size_t>(i)] * x[j].derivative(i);
    }
  }
  return out;
}

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST(Wedge, BasisVectors) {
  const MVec w = blf::wedge(MVec::basis(4, bits({0})), MVec::basis(4, bits({1})));
  EXPECT_EQ(w, MVec::basis(4, bits({0, 1})));
  EXPECT_EQ(blf::wedge(MVec::basis(4, bits({1})), MVec::basis(4, bits({0}))), -w);
}

TEST(Wedge, VectorWithItselfVanishes) {
  blf::RandomSource rng(1);
  const MVec x = rng.mvec(4, 1, 2);
  EXPECT_TRUE(blf::wedge(x, x).is_zero());
}

TEST(Wedge, Bilinear) {
  const MVec a = MVec::basis(4, bits({1}), P("x1"));
  const MVec b = MVec::basis(4, bits({2}), P("x2"));
  EXPECT_EQ(blf::wedge(a, b), MVec::basis(4, bits({1, 2}), P("x1*x2")));
}

TEST(Wedge, OverflowIsZero) {
  const MVec w = blf::wedge(MVec::basis(4, bits({0, 1, 2})), MVec::basis(4, bits({1, 3})));
  EXPECT_TRUE(w.overflow());
  EXPECT_TRUE(w.is_zero());
}

TEST(Wedge, GradedCommutative) {
  blf::RandomSource rng(2);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; p + q <= 4; ++q) {
      const MVec x = rng.mvec(4, p, 2);
      const MVec y = rng.mvec(4, q, 2);
      EXPECT_EQ(blf::wedge(x, y), blf::wedge(y, x) * blf::Rational(parity_sign(p * q)));
    }
  }
}

TEST(Schouten, CoordinateFields) {
  // [d_0, x_0 d_1] = d_1
  const MVec d0 = MVec::basis(4, bits({0}));
  const MVec x0d1 = MVec::basis(4, bits({1}), Poly::variable(4, 0));
  EXPECT_EQ(blf::schouten(d0, x0d1), MVec::basis(4, bits({1})));
}

TEST(Schouten, VectorFieldOnFunction) {
  const MVec x = field({"x2", "x1^2", "0", "x4*x3"});
  const Poly f = P("x1*x2 + x3^2*x4");
  Poly expected(4);
  for (int i = 0; i < 4; ++i) expected += x[static_cast<std::size_t>(i)] * f.derivative(i);
  EXPECT_EQ(blf::schouten(x, MVec::function(f)), MVec::function(expected));
}

TEST(Schouten, VectorFieldsGiveLieBracket) {
  blf::RandomSource rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MVec x = rng.mvec(4, 1, 3);
    const MVec y = rng.mvec(4, 1, 3);
    EXPECT_EQ(blf::schouten(x, y), lie_bracket(x, y));
  }
}

TEST(Schouten, BivectorOnFunctionIsHamiltonian) {
  const blf::PoissonModel fold = blf::model_fold();
  blf::RandomSource rng(4);
  const Poly f = rng.poly(4, 3);
  MVec expected(4, 1);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      if (i != j) expected[static_cast<std::size_t>(j)] += blf::bracket(fold, j, i) * f.derivative(i);
    }
  }
  EXPECT_EQ(blf::schouten(fold.pi, MVec::function(f)), expected);
}

TEST(Schouten, GradedAntisymmetry) {
  blf::RandomSource rng(5);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      if (p + q - 1 > 4 || p + q == 0) continue;
      const MVec x = rng.mvec(4, p, 2);
      const MVec y = rng.mvec(4, q, 2);
      EXPECT_EQ(blf::schouten(x, y), blf::schouten(y, x) * blf::Rational(-parity_sign((p - 1) * (q - 1))))
          << "p=" << p << " q=" << q;
    }
  }
}

TEST(Schouten, GradedJacobi) {
  blf::RandomSource rng(6);
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      const MVec a = rng.mvec(4, p, 2);
      const MVec b = rng.mvec(4, q, 2);
      const MVec c = rng.mvec(4, 1, 2);
      const MVec lhs = blf::schouten(a, blf::schouten(b, c));
      const MVec rhs = blf::schouten(blf::schouten(a, b), c) +
                       blf::schouten(b, blf::schouten(a, c)) * blf::Rational(parity_sign((p - 1) * (q - 1)));
      EXPECT_EQ(lhs, rhs) << "p=" << p << " q=" << q;
    }
  }
}

TEST(Schouten, ModelsArePoisson) {
  const blf::PoissonModel fold = blf::model_fold();
  const blf::PoissonModel lef = blf::model_lefschetz();
  EXPECT_TRUE(blf::schouten(fold.pi, fold.pi).is_zero());
  EXPECT_TRUE(blf::schouten(lef.pi, lef.pi).is_zero());
  const Poly q2 = fold.casimirs[1];
  EXPECT_TRUE(blf::schouten(fold.pi, MVec::function(q2)).is_zero());
}

TEST(Lichnerowicz, ConstantsAndSquares) {
  const blf::PoissonModel fold = blf::model_fold();
  const blf::PoissonModel lef = blf::model_lefschetz();
  EXPECT_TRUE(blf::lichnerowicz_d(fold.pi, MVec::function(Poly::constant(4, 5))).is_zero());
  // d(x1) = x3 d2 - x2 d3 for the fold model
  EXPECT_EQ(blf::lichnerowicz_d(fold.pi, MVec::function(Poly::variable(4, 1))),
            MVec(4, 1, {Poly(4), Poly(4), Poly::variable(4, 3), -Poly::variable(4, 2)}));
  const MVec once = blf::lichnerowicz_d(lef.pi, MVec::function(P("x1*x2")));
  EXPECT_TRUE(blf::lichnerowicz_d(lef.pi, once).is_zero());
  EXPECT_THROW(blf::lichnerowicz_d(once, once), blf::UsageError);
}

TEST(Star, TopVectorContractsToOne) {
  const blf::VolumeForm vol(4);
  const blf::Form f = blf::star_contract(MVec::basis(4, 0xF), vol);
  EXPECT_EQ(f.coefficients, MVec::function(Poly::constant(4, 1)));
}

TEST(Star, EulerFieldGivesAlternatingThreeForm) {
  const blf::VolumeForm vol(4);
  const blf::Form rho = blf::star_contract(blf::euler_field(4), vol);
  MVec expected(4, 3);
  for (int i = 0; i < 4; ++i) {
    const unsigned rest = 0xFU & ~(1U << static_cast<unsigned>(i));
    expected.at_mask(rest) = Poly::variable(4, i) * blf::Rational(parity_sign(i));
  }
  EXPECT_EQ(rho.coefficients, expected);
}

TEST(Star, InverseRoundTrip) {
  blf::RandomSource rng(7);
  const blf::VolumeForm vol(4, blf::Rational(-3, 2));
  for (int k = 0; k <= 4; ++k) {
    const MVec x = rng.mvec(4, k, 2);
    EXPECT_EQ(blf::star_inverse(blf::star_contract(x, vol), vol), x);
  }
}

TEST(Modular, Examples) {
  const blf::VolumeForm vol(4);
  EXPECT_TRUE(blf::modular_vf(blf::model_fold().pi, vol).is_zero());
  EXPECT_TRUE(blf::modular_vf(blf::model_lefschetz().pi, vol).is_zero());
  const MVec pi = MVec::basis(4, bits({0, 1}), Poly::variable(4, 0));
  EXPECT_EQ(blf::modular_vf(pi, vol), MVec::basis(4, bits({1})));
}

TEST(Euler, DivergenceIsFour) {
  Poly div(4);
  const MVec e = blf::euler_field(4);
  for (int i = 0; i < 4; ++i) div += e[static_cast<std::size_t>(i)].derivative(i);
  EXPECT_EQ(div, Poly::constant(4, 4));
}
