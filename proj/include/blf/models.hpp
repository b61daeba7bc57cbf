#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blf/mvfield.hpp"
#include "blf/poly.hpp"

namespace blf {

/// How a model was built; decides which closed-form coboundaries apply to it.
enum class ModelFamily { fold, jacobian, cone3d, generic };

/// Data of a Jacobian structure {x_i, x_j} = mu * dx_i ^ dx_j ^ dP1 ^ dP2 / vol.
struct JacobianData {
  Poly mu;
  Poly p1;
  Poly p2;
};

struct PoissonModel {
  std::string name;
  /// "fold" or "lefschetz" for those models and their rescalings, empty otherwise.
  std::string origin;
  ModelFamily family = ModelFamily::generic;
  int nvars = 4;
  MVec pi{4, 2};
  std::vector<Poly> casimirs;
  /// Common degree of the bivector coefficients; -1 when they are not homogeneous.
  int coeff_degree = -1;
  std::vector<std::string> variable_names;
  std::optional<JacobianData> jacobian;
};

/// Throws StructureError unless [pi, pi] = 0 and every Casimir is closed.
void validate(const PoissonModel& model);

/// {x_i, x_j} as the polynomial coefficient of d_i ^ d_j (antisymmetric in i, j).
Poly bracket(const PoissonModel& model, int i, int j);

/// The common homogeneous degree of the coefficients of x, or -1.
int homogeneous_degree(const MVec& x);

PoissonModel jacobian_bivector(const Poly& mu, const Poly& p1, const Poly& p2);
PoissonModel jacobian_bivector(const Rational& mu, const Poly& p1, const Poly& p2);

/// P1 = x1^2 - x2^2 + x3^2 - x4^2 and P2 = 2(x1 x2 + x3 x4).
Poly lefschetz_p1();
Poly lefschetz_p2();

/// Lefschetz-point model: the Jacobian structure with mu = -1/4 and Casimirs P1, P2.
PoissonModel model_lefschetz();

/// Fold model x1 d23 + x2 d13 - x3 d12 in (x0, x1, x2, x3), Casimirs x0 and -x1^2 + x2^2 + x3^2.
PoissonModel model_fold();

/// Pushforward under (x0, x1, x2, x3) -> (x0, -x1, x2, -x3).
MVec involution_pushforward(const MVec& x);

/// The cone structure on R^3 with {x_a, x_b} = d_c(phi) for cyclic (a, b, c),
/// phi = (x1^2 - x2^2 - x3^2) / 2, whose brackets are those of the fold model
/// with x0 dropped.
PoissonModel restrict_to_3d();

/// c * pi with the same Casimirs. Jacobian models keep their Jacobian data with mu scaled.
PoissonModel scale_model(const PoissonModel& model, const Rational& c);

/// "fold", "lefschetz" or "jacobian:<mu>:<P1>:<P2>" (polynomials in x1..x4). Throws UsageError.
PoissonModel parse_model(std::string_view text);

}  // namespace blf
