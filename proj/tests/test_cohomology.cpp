#include <gtest/gtest.h>

#include "printers.hpp"

#include "blf/checks.hpp"
#include "blf/cohomology.hpp"
#include "blf/errors.hpp"
#include "blf/random.hpp"

using blf::CoboundaryKind;
using blf::MVec;
using blf::Poly;

namespace {

std::vector<long> row(const blf::BettiReport& r, int k, int d_max) {
  std::vector<long> out;
  for (int d = 0; d <= d_max; ++d) out.push_back(r.at(k, d).computed);
  return out;
}

}  // namespace

TEST(GradedBasis, CoordinatesRoundTrip) {
  const blf::GradedBasis basis(4, 2, 3);
  EXPECT_EQ(basis.size(), 6U * 20U);
  blf::RandomSource rng(1);
  const MVec x = rng.homogeneous_mvec(4, 2, 3);
  MVec rebuilt(4, 2);
  for (const auto& [i, c] : basis.coordinates(x)) rebuilt += basis.element(i) * c;
  EXPECT_EQ(rebuilt, x);
  EXPECT_THROW(basis.coordinates(rng.homogeneous_mvec(4, 2, 2)), blf::StructureError);
}

TEST(GradedMatrix, FoldFunctionsInDegreeOne) {
  const auto fold = blf::model_fold();
  const blf::GradedMatrix m = blf::graded_matrix(fold, CoboundaryKind::fold_direct, 0, 1);
  EXPECT_EQ(m.rows, 16U);
  EXPECT_EQ(m.cols, 4U);
  EXPECT_EQ(blf::exact_rank(m), 3U);
  EXPECT_TRUE(blf::is_zero(blf::graded_matrix(fold, CoboundaryKind::fold_direct, 0, 0)));
}

TEST(GradedMatrix, RankNullityAndKindIndependence) {
  const auto fold = blf::model_fold();
  for (int d = 0; d <= 4; ++d) {
    const auto compact = blf::graded_matrix(fold, CoboundaryKind::fold_direct, 1, d);
    const auto bracket = blf::graded_matrix(fold, CoboundaryKind::schouten, 1, d);
    EXPECT_EQ(compact, bracket);
    EXPECT_LE(blf::exact_rank(compact), compact.cols);
  }
  const auto lef = blf::model_lefschetz();
  EXPECT_EQ(blf::graded_matrix(lef, CoboundaryKind::jacobian_general, 2, 2),
            blf::graded_matrix(lef, CoboundaryKind::schouten, 2, 2));
  EXPECT_EQ(blf::degree_shift(fold), 0);
  EXPECT_EQ(blf::degree_shift(lef), 1);
}

TEST(GradedMatrix, ComplexSquaresToZero) {
  for (const auto& r : blf::complex_checks(blf::model_fold(), CoboundaryKind::fold_direct, 4)) {
    EXPECT_TRUE(r.pass) << r.name;
  }
  for (const auto& r : blf::complex_checks(blf::model_lefschetz(), CoboundaryKind::jacobian_general, 3)) {
    EXPECT_TRUE(r.pass) << r.name;
  }
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(blf::hilbert_free_module({0}, {2, 2}, 4).coefficients, (std::vector<long>{1, 0, 2, 0, 3}));
  EXPECT_EQ(blf::hilbert_free_module({0}, {1, 2}, 4).coefficients, (std::vector<long>{1, 1, 2, 2, 3}));
  EXPECT_EQ(blf::hilbert_free_module({0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 3, 3}, {2, 2}, 5).coefficients,
            (std::vector<long>{4, 3, 12, 8, 20, 13}));
  EXPECT_EQ(blf::hilbert_free_module({}, {1, 2}, 3).coefficients, (std::vector<long>{0, 0, 0, 0}));
}

TEST(Betti, FoldTable) {
  const auto report = blf::betti_table(blf::model_fold(), CoboundaryKind::fold_direct, 4, 8);
  const std::vector<long> casimir_row = {1, 1, 2, 2, 3, 3, 4, 4, 5};
  EXPECT_EQ(row(report, 0, 8), casimir_row);
  EXPECT_EQ(row(report, 1, 8), casimir_row);
  EXPECT_EQ(row(report, 2, 8), std::vector<long>(9, 0));
  EXPECT_EQ(row(report, 3, 8), casimir_row);
  EXPECT_EQ(row(report, 4, 8), casimir_row);
  EXPECT_TRUE(report.all_match());
}

TEST(Betti, IndependentOfKind) {
  const auto fold = blf::model_fold();
  EXPECT_EQ(row(blf::betti_table(fold, CoboundaryKind::schouten, 4, 5), 1, 5),
            row(blf::betti_table(fold, CoboundaryKind::fold_direct, 4, 5), 1, 5));
  const auto lef = blf::model_lefschetz();
  const auto a = blf::betti_table(lef, CoboundaryKind::schouten, 4, 3);
  const auto b = blf::betti_table(lef, CoboundaryKind::jacobian_general, 4, 3);
  const auto c = blf::betti_table(lef, CoboundaryKind::jacobian_const_quarter, 4, 3);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(row(a, k, 3), row(b, k, 3));
    EXPECT_EQ(row(a, k, 3), row(c, k, 3));
  }
}

TEST(Betti, FoldSplitAgreesWithUnsplit) {
  const auto split = blf::fold_split_betti(6);
  const auto whole = blf::betti_table(blf::model_fold(), CoboundaryKind::fold_direct, 4, 6);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(row(split, k, 6), row(whole, k, 6)) << "k=" << k;
}

TEST(Betti, FoldFirstCohomologySplit) {
  const auto whole = blf::betti_table(blf::model_fold(), CoboundaryKind::fold_direct, 1, 8);
  for (int d = 0; d <= 8; ++d) {
    const auto s = blf::fold_h1_split(d);
    EXPECT_EQ(s.transverse_part, 0) << d;
    EXPECT_EQ(s.casimir_part, whole.at(1, d).computed) << d;
  }
}

TEST(Betti, LefschetzTopDegreeMatchesFreeModuleOfRankSeven) {
  const auto report = blf::betti_table(blf::model_lefschetz(), CoboundaryKind::jacobian_general, 4, 5);
  EXPECT_EQ(row(report, 4, 5), (std::vector<long>{1, 4, 4, 8, 7, 12}));
}

TEST(Betti, LefschetzFunctionsAreCasimirPolynomials) {
  const auto report = blf::betti_table(blf::model_lefschetz(), CoboundaryKind::jacobian_general, 0, 6);
  EXPECT_EQ(row(report, 0, 6), (std::vector<long>{1, 0, 2, 0, 3, 0, 4}));
}

TEST(Generators, FoldSpanFreely) {
  const auto fold = blf::model_fold();
  for (int k = 0; k <= 4; ++k) {
    const auto rep = blf::verify_generators(fold, CoboundaryKind::fold_direct, k, blf::fold_generators(k), 8);
    EXPECT_TRUE(rep.pass()) << "k=" << k;
  }
}

TEST(Generators, LefschetzListsAreCocycles) {
  const auto lef = blf::model_lefschetz();
  const std::size_t expected_counts[5] = {1, 1, 6, 13, 7};
  for (int k = 0; k <= 4; ++k) {
    const auto gens = blf::lefschetz_generators(k);
    EXPECT_EQ(gens.size(), expected_counts[k]);
    const auto rep = blf::verify_generators(lef, CoboundaryKind::jacobian_general, k, gens, 3);
    EXPECT_TRUE(rep.non_cocycles.empty()) << "k=" << k;
  }
}

TEST(Generators, LefschetzEulerClassIsNonzero) {
  const auto lef = blf::model_lefschetz();
  const auto rep = blf::verify_generators(lef, CoboundaryKind::jacobian_general, 1, blf::lefschetz_generators(1), 1);
  ASSERT_EQ(rep.degrees.size(), 2U);
  EXPECT_EQ(rep.degrees[1].independent, 1U);
}

TEST(Generators, LefschetzTopDegreeSpans) {
  const auto lef = blf::model_lefschetz();
  const auto rep = blf::verify_generators(lef, CoboundaryKind::jacobian_general, 4, blf::lefschetz_generators(4), 5);
  EXPECT_TRUE(rep.pass());
}

TEST(Cone, MilnorNumberAndVanishing) {
  const auto cone = blf::restrict_to_3d();
  const Poly phi = blf::parse_poly("1/2*x1^2 - 1/2*x2^2 - 1/2*x3^2", 3);
  EXPECT_EQ(blf::milnor_quotient_dimension(phi, 2), 1);
  const auto report = blf::betti_table(cone, CoboundaryKind::schouten, 3, 8);
  for (int d = 0; d <= 8; ++d) {
    EXPECT_EQ(report.at(1, d).computed, 0) << d;
    EXPECT_EQ(report.at(2, d).computed, 0) << d;
  }
}

TEST(Cone, CircleDifferentialIsConeDifferential) {
  // d11 on f d_0 with f free of x0 is the cone's d^0 of f, up to the circle factor.
  const auto cone = blf::restrict_to_3d();
  const int target[3] = {1, 2, 3};
  blf::RandomSource rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly f = rng.poly(3, 3);
    const MVec cone_d0 = blf::schouten(cone.pi, MVec::function(f));
    MVec lifted(4, 1);
    for (int i = 0; i < 3; ++i) lifted[static_cast<std::size_t>(i + 1)] = cone_d0[static_cast<std::size_t>(i)].remap(4, target);
    const MVec f0 = MVec::basis(4, 1U, f.remap(4, target));
    EXPECT_EQ(blf::d_fold_split(blf::FoldPart::d11, f0), blf::wedge_circle(lifted));
  }
}

TEST(Cone, SplitRelationsAtMatrixLevel) {
  for (int d = 0; d <= 4; ++d) {
    const auto m = blf::fold_split_matrices(d);
    EXPECT_EQ(m.d11, m.circle_d0) << d;
    EXPECT_EQ(m.d21_circle, m.circle_d12) << d;
  }
}
