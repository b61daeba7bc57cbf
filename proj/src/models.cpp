#include "blf/models.hpp"

#include <array>
#include <bit>

#include "blf/errors.hpp"

namespace blf {

namespace {

unsigned pair_mask(int i, int j) { return (1U << static_cast<unsigned>(i)) | (1U << static_cast<unsigned>(j)); }

Poly var(int nvars, int i) { return Poly::variable(nvars, i); }

}  // namespace

void validate(const PoissonModel& model) {
  if (model.pi.k() != 2 || model.pi.nvars() != model.nvars) throw StructureError(model.name + ": not a bivector");
  if (!schouten(model.pi, model.pi).is_zero()) throw StructureError(model.name + ": [pi, pi] does not vanish");
  for (const auto& c : model.casimirs) {
    if (!schouten(model.pi, MVec::function(c)).is_zero()) {
      throw StructureError(model.name + ": Casimir " + to_string(c, model.variable_names) + " is not closed");
    }
  }
}

Poly bracket(const PoissonModel& model, int i, int j) {
  if (i == j) return Poly(model.nvars);
  if (i < j) return model.pi.at_mask(pair_mask(i, j));
  return -model.pi.at_mask(pair_mask(i, j));
}

int homogeneous_degree(const MVec& x) {
  int deg = -1;
  for (const auto& c : x.coeffs()) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return -1;
    if (deg >= 0 && c.degree() != deg) return -1;
    deg = c.degree();
  }
  return deg;
}

PoissonModel jacobian_bivector(const Poly& mu, const Poly& p1, const Poly& p2) {
  if (mu.nvars() != 4 || p1.nvars() != 4 || p2.nvars() != 4) throw DimensionError("Jacobian structures live on R^4");
  std::array<Poly, 4> g1;
  std::array<Poly, 4> g2;
  for (int i = 0; i < 4; ++i) {
    g1[static_cast<std::size_t>(i)] = p1.derivative(i);
    g2[static_cast<std::size_t>(i)] = p2.derivative(i);
  }
  MVec pi(4, 2);
  for (unsigned m : basis_subsets(4, 2)) {
    const unsigned rest = 0xFU & ~m;
    const int k = std::countr_zero(rest);
    const int l = 31 - std::countl_zero(rest);
    // dx_i ^ dx_j ^ dx_k ^ dx_l = sign(i j k l) vol
    Poly minor = g1[static_cast<std::size_t>(k)] * g2[static_cast<std::size_t>(l)] -
                 g1[static_cast<std::size_t>(l)] * g2[static_cast<std::size_t>(k)];
    Poly entry = mu * minor;
    pi.at_mask(m) = merge_sign(m, rest) > 0 ? entry : -entry;
  }
  PoissonModel model;
  model.name = "jacobian";
  model.family = ModelFamily::jacobian;
  model.nvars = 4;
  model.pi = std::move(pi);
  model.casimirs = {p1, p2};
  model.coeff_degree = homogeneous_degree(model.pi);
  model.variable_names = default_variable_names(4);
  model.jacobian = JacobianData{mu, p1, p2};
  validate(model);
  return model;
}

PoissonModel jacobian_bivector(const Rational& mu, const Poly& p1, const Poly& p2) {
  return jacobian_bivector(Poly::constant(4, mu), p1, p2);
}

Poly lefschetz_p1() {
  return var(4, 0).pow(2) - var(4, 1).pow(2) + var(4, 2).pow(2) - var(4, 3).pow(2);
}

Poly lefschetz_p2() { return (var(4, 0) * var(4, 1) + var(4, 2) * var(4, 3)) * Rational(2); }

PoissonModel model_lefschetz() {
  PoissonModel model = jacobian_bivector(Rational(-1, 4), lefschetz_p1(), lefschetz_p2());
  model.name = "lefschetz";
  model.origin = "lefschetz";
  return model;
}

PoissonModel model_fold() {
  PoissonModel model;
  model.name = "fold";
  model.origin = "fold";
  model.family = ModelFamily::fold;
  model.nvars = 4;
  MVec pi(4, 2);
  pi.at_mask(pair_mask(2, 3)) = var(4, 1);
  pi.at_mask(pair_mask(1, 3)) = var(4, 2);
  pi.at_mask(pair_mask(1, 2)) = -var(4, 3);
  model.pi = std::move(pi);
  model.casimirs = {var(4, 0), -var(4, 1).pow(2) + var(4, 2).pow(2) + var(4, 3).pow(2)};
  model.coeff_degree = 1;
  model.variable_names = {"x0", "x1", "x2", "x3"};
  validate(model);
  return model;
}

MVec involution_pushforward(const MVec& x) {
  if (x.nvars() != 4) throw DimensionError("the involution acts on the fold chart (x0, x1, x2, x3)");
  constexpr std::array<bool, 4> flip = {false, true, false, true};
  constexpr unsigned flipped = 0b1010U;
  MVec out(4, x.k());
  const auto masks = basis_subsets(4, x.k());
  for (std::size_t s = 0; s < masks.size(); ++s) {
    Poly c = x[s].reflect(flip);
    out[s] = std::popcount(masks[s] & flipped) % 2 == 0 ? c : -c;
  }
  return out;
}

PoissonModel restrict_to_3d() {
  const Poly phi = (var(3, 0).pow(2) - var(3, 1).pow(2) - var(3, 2).pow(2)) * Rational(1, 2);
  MVec pi(3, 2);
  // {x1, x2} = d3 phi, {x2, x3} = d1 phi, {x3, x1} = d2 phi
  pi.at_mask(pair_mask(0, 1)) = phi.derivative(2);
  pi.at_mask(pair_mask(1, 2)) = phi.derivative(0);
  pi.at_mask(pair_mask(0, 2)) = -phi.derivative(1);
  PoissonModel model;
  model.name = "cone3d";
  model.family = ModelFamily::cone3d;
  model.nvars = 3;
  model.pi = std::move(pi);
  model.casimirs = {phi};
  model.coeff_degree = 1;
  model.variable_names = {"x1", "x2", "x3"};
  validate(model);
  return model;
}

PoissonModel scale_model(const PoissonModel& model, const Rational& c) {
  if (c == 0) throw UsageError("scaling factor must be nonzero");
  PoissonModel out = model;
  out.name = model.name + "*" + to_string(c);
  out.pi *= c;
  if (out.jacobian) {
    out.jacobian->mu *= c;
  } else {
    out.family = ModelFamily::generic;
  }
  return out;
}

PoissonModel parse_model(std::string_view text) {
  if (text == "fold") return model_fold();
  if (text == "lefschetz") return model_lefschetz();
  constexpr std::string_view prefix = "jacobian:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::vector<std::string_view> parts;
    std::string_view rest = text.substr(prefix.size());
    for (std::size_t pos; (pos = rest.find(':')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
      parts.push_back(rest.substr(0, pos));
    }
    parts.push_back(rest);
    if (parts.size() != 3) throw UsageError("expected jacobian:<mu>:<P1>:<P2>");
    try {
      PoissonModel model = jacobian_bivector(parse_poly(parts[0], 4), parse_poly(parts[1], 4), parse_poly(parts[2], 4));
      model.name = std::string(text);
      return model;
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad model polynomial: ") + e.what());
    }
  }
  throw UsageError("unknown model '" + std::string(text) + "'");
}

}  // namespace blf
