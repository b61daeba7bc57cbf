#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "blf/coboundary.hpp"
#include "blf/linalg.hpp"
#include "blf/models.hpp"

namespace blf {

/// Coordinates of homogeneous k-vectors of one degree: index = slot * dim V_d + monomial position.
class GradedBasis {
public:
  GradedBasis(int nvars, int k, int degree);

  int nvars() const { return nvars_; }
  int k() const { return k_; }
  int degree() const { return degree_; }
  std::size_t monomial_count() const { return monomials_.size(); }
  std::size_t size() const { return slots_ * monomials_.size(); }

  /// The basis multivector with the given coordinate.
  MVec element(std::size_t index) const;
  /// Coordinates of x; throws StructureError when x has a component outside this degree.
  SparseVector<Rational> coordinates(const MVec& x) const;

private:
  int nvars_;
  int k_;
  int degree_;
  std::size_t slots_;
  std::vector<Monomial> monomials_;
  std::unordered_map<std::uint64_t, std::uint32_t> position_;
};

/// The matrix of d^k from degree in_degree to out_degree = in_degree + coeff_degree - 1,
/// stored by columns.
struct GradedMatrix {
  int k = 0;
  int in_degree = 0;
  int out_degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector<Rational>> columns;
};

/// Output degree shift of d for a model with homogeneous coefficients.
int degree_shift(const PoissonModel& model);

GradedMatrix graded_matrix(const PoissonModel& model, CoboundaryKind kind, int k, int d);

/// Matrix of an arbitrary linear map between two graded pieces.
GradedMatrix operator_matrix(const GradedBasis& source, const GradedBasis& target,
                             const std::function<MVec(const MVec&)>& map);

std::size_t exact_rank(const GradedMatrix& m);

/// Product a * b (columns of b pushed through a); throws DimensionError on a shape mismatch.
GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b);

bool is_zero(const GradedMatrix& m);
bool operator==(const GradedMatrix& a, const GradedMatrix& b);

struct HilbertSeries {
  std::vector<int> generator_degrees;
  std::vector<int> casimir_degrees;
  std::vector<long> coefficients;
};

/// Coefficients of (sum_g t^g) / prod_c (1 - t^c) up to t^d_max.
HilbertSeries hilbert_free_module(const std::vector<int>& generator_degrees, const std::vector<int>& casimir_degrees,
                                  int d_max);

struct BettiCell {
  int k = 0;
  int degree = 0;
  long computed = 0;
  std::optional<long> predicted;
  std::size_t kernel = 0;
  std::size_t image = 0;
};

struct BettiReport {
  std::string model;
  std::vector<BettiCell> cells;  // sorted by (k, degree)

  const BettiCell& at(int k, int degree) const;
  bool all_match() const;
};

/// Betti(k, d) = dim ker(d^k at degree d) - rank(d^{k-1} into degree d), for k <= k_max, d <= d_max.
BettiReport betti_table(const PoissonModel& model, CoboundaryKind kind, int k_max, int d_max);

/// Generator degrees per k of the free Casimir-module description, and the Casimir degrees.
struct FreeModulePrediction {
  std::vector<int> casimir_degrees;
  std::vector<std::vector<int>> generator_degrees;  // index k
};

/// Predictions for the fold and Lefschetz models; std::nullopt for other models.
std::optional<FreeModulePrediction> predicted_modules(const PoissonModel& model);

/// Fills BettiCell::predicted from a prediction.
void attach_predictions(BettiReport& report, const FreeModulePrediction& prediction);

/// Named generators of the free-module description of H^k.
struct Generator {
  std::string label;
  MVec field;
};

std::vector<Generator> fold_generators(int k);
std::vector<Generator> lefschetz_generators(int k);
std::vector<Generator> model_generators(const PoissonModel& model, int k);

struct GeneratorDegreeCheck {
  int degree = 0;
  std::size_t candidates = 0;       // Casimir multiples of generators in this degree
  std::size_t independent = 0;      // their rank modulo the image of d^{k-1}
  long betti = 0;
  bool spans() const { return static_cast<long>(independent) == betti; }
  bool free() const { return independent == candidates; }
};

struct GeneratorReport {
  int k = 0;
  std::vector<std::string> non_cocycles;
  std::vector<GeneratorDegreeCheck> degrees;
  bool pass() const;
};

/// Checks that the generators are cocycles and that their Casimir multiples
/// form a basis of H^k modulo coboundaries at every degree <= d_max.
GeneratorReport verify_generators(const PoissonModel& model, CoboundaryKind kind, int k,
                                  const std::vector<Generator>& generators, int d_max);

/// Monomials in the model's Casimirs of total degree d.
std::vector<Poly> casimir_monomials(const PoissonModel& model, int d);

/// dim of R[x]/<d_1 f, ..., d_n f> in degrees <= d_max (an upper bound is not
/// claimed: the count is taken degree by degree).
long milnor_quotient_dimension(const Poly& f, int d_max);

/// The H^1 decomposition of the fold model at one degree:
/// dim ker(d^0) and dim ker(d12) - rank(d^0 composed with the circle embedding).
struct FoldFirstCohomologySplit {
  long casimir_part = 0;
  long transverse_part = 0;
};
FoldFirstCohomologySplit fold_h1_split(int d);

/// Matrices of the fold splitting relations at degree d: {lhs, rhs} pairs for
/// d11 = (^ d_0) o d^0 and d21 o (^ d_0) = (^ d_0) o d12.
struct FoldSplitMatrices {
  GradedMatrix d11;
  GradedMatrix circle_d0;
  GradedMatrix d21_circle;
  GradedMatrix circle_d12;
};
FoldSplitMatrices fold_split_matrices(int d);

/// Betti table of the fold model computed from the split pieces.
BettiReport fold_split_betti(int d_max);

}  // namespace blf
