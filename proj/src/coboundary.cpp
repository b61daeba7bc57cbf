#include "blf/coboundary.hpp"

#include <array>

#include "blf/errors.hpp"

namespace blf {

using calc4::CrossTuple6;
using calc4::Tuple4;
using calc4::Tuple6;

namespace {

unsigned mask_of(std::initializer_list<int> idx) {
  unsigned m = 0;
  for (int i : idx) m |= 1U << static_cast<unsigned>(i);
  return m;
}

struct JacobianParts {
  Poly mu;
  CrossTuple6 j;      // grad P1 x grad P2
  CrossTuple6 mu_j;   // mu (grad P1 x grad P2)
  Tuple4 log_d0_mu;   // mu^{-1} d0(mu) = -grad(mu) bar-x J
};

JacobianParts jacobian_parts(const PoissonModel& model) {
  const auto& data = *model.jacobian;
  JacobianParts parts;
  parts.mu = data.mu;
  parts.j = calc4::cross(calc4::grad(data.p1), calc4::grad(data.p2));
  parts.mu_j = data.mu * parts.j;
  parts.log_d0_mu = -calc4::barcross(calc4::grad(data.mu), parts.j);
  return parts;
}

MVec oriented(MVec x) {
  x *= Rational(kCompactOrientation);
  return x;
}

MVec top(const Poly& f) { return MVec(4, 4, {f}); }

MVec general(const PoissonModel& model, int k, const MVec& x) {
  const JacobianParts p = jacobian_parts(model);
  switch (k) {
    case 0:
      return calc4::vector_field(-p.mu * calc4::barcross(calc4::grad(x[0]), p.j));
    case 1: {
      const Tuple4 y = calc4::to_tuple4(x);
      const CrossTuple6 a = calc4::directional(y, p.mu_j);
      const CrossTuple6 b = calc4::apply_phi(calc4::cross(hamiltonian_operators(model), y));
      return calc4::bivector_field(calc4::apply_K_inv(a + b));
    }
    case 2: {
      const CrossTuple6 pk = calc4::apply_phi(calc4::apply_K(calc4::to_tuple6(x)));
      Tuple4 s = calc4::barcross(hamiltonian_operators(model), pk);
      s -= calc4::barcross(p.log_d0_mu, pk);
      s += calc4::boxtimes(calc4::partials(p.mu_j), pk);
      return calc4::trivector_field(-calc4::apply_D(s));
    }
    case 3: {
      const Tuple4 dz = calc4::apply_D(calc4::to_tuple4(x));
      return top(p.mu * dot(calc4::nabla_cross(dz), calc4::apply_phi(p.j)) - dot(dz, p.log_d0_mu));
    }
    default:
      throw UsageError("closed-form coboundaries are defined for k = 0..3");
  }
}

MVec quarter(const PoissonModel& model, int k, const MVec& x) {
  const Rational q(1, 4);
  const CrossTuple6 j = jacobian_parts(model).j;
  const CrossTuple6 phi_j = calc4::apply_phi(j);
  switch (k) {
    case 0:
      return calc4::vector_field(q * calc4::barcross(calc4::grad(x[0]), j));
    case 1: {
      const Tuple4 y = calc4::to_tuple4(x);
      const CrossTuple6 s = calc4::div(y) * j + calc4::nabla_cross(calc4::barcross(y, phi_j));
      return calc4::bivector_field(q * calc4::apply_K_inv(s));
    }
    case 2: {
      const CrossTuple6 kw = calc4::apply_K(calc4::to_tuple6(x));
      const Tuple4 s = calc4::barcross(calc4::nabla_barcross(kw), phi_j) + calc4::grad(dot(kw, phi_j));
      return calc4::trivector_field(q * calc4::apply_D(s));
    }
    case 3: {
      const Tuple4 dz = calc4::apply_D(calc4::to_tuple4(x));
      return top(dot(calc4::nabla_cross(dz), phi_j) * Rational(-1, 4));
    }
    default:
      throw UsageError("closed-form coboundaries are defined for k = 0..3");
  }
}

bool is_quarter(const PoissonModel& model) {
  return model.jacobian && model.jacobian->mu == Poly::constant(4, Rational(-1, 4));
}

// (i, j, k) with i < j over {1, 2, 3} and k completing the triple.
constexpr std::array<std::array<int, 3>, 3> kTransversePairs = {{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}};

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::string_view kind_name(CoboundaryKind kind) {
  switch (kind) {
    case CoboundaryKind::schouten: return "schouten";
    case CoboundaryKind::jacobian_general: return "jacobian_general";
    case CoboundaryKind::jacobian_const_quarter: return "jacobian_const_quarter";
    case CoboundaryKind::fold_direct: return "fold_direct";
  }
  return "unknown";
}

CoboundaryKind parse_kind(std::string_view name) {
  for (auto kind : {CoboundaryKind::schouten, CoboundaryKind::jacobian_general,
                    CoboundaryKind::jacobian_const_quarter, CoboundaryKind::fold_direct}) {
    if (kind_name(kind) == name) return kind;
  }
  throw UsageError("unknown coboundary kind '" + std::string(name) + "'");
}

CoboundaryKind compact_kind(const PoissonModel& model) {
  switch (model.family) {
    case ModelFamily::fold: return CoboundaryKind::fold_direct;
    case ModelFamily::jacobian: return CoboundaryKind::jacobian_general;
    default: return CoboundaryKind::schouten;
  }
}

void check_kind(CoboundaryKind kind, const PoissonModel& model) {
  switch (kind) {
    case CoboundaryKind::schouten:
      return;
    case CoboundaryKind::jacobian_general:
      if (!model.jacobian) throw UsageError("jacobian_general needs a Jacobian model");
      return;
    case CoboundaryKind::jacobian_const_quarter:
      if (!is_quarter(model)) throw UsageError("jacobian_const_quarter needs a Jacobian model with mu = -1/4");
      return;
    case CoboundaryKind::fold_direct:
      if (model.family != ModelFamily::fold) throw UsageError("fold_direct needs the fold model");
      return;
  }
}

MVec coboundary(CoboundaryKind kind, const PoissonModel& model, const MVec& x) {
  check_kind(kind, model);
  switch (kind) {
    case CoboundaryKind::schouten: return schouten(model.pi, x);
    case CoboundaryKind::fold_direct: return d_fold(x.k(), x);
    default: return d_jacobian(kind, model, x.k(), x);
  }
}

MVec d_jacobian(CoboundaryKind kind, const PoissonModel& model, int k, const MVec& x) {
  if (kind != CoboundaryKind::jacobian_general && kind != CoboundaryKind::jacobian_const_quarter) {
    throw UsageError("d_jacobian takes a Jacobian kind");
  }
  check_kind(kind, model);
  if (k < 0 || k > 3) throw UsageError("closed-form coboundaries are defined for k = 0..3");
  if (x.k() != k || x.nvars() != 4) throw DimensionError("input is not a " + std::to_string(k) + "-vector on R^4");
  return oriented(kind == CoboundaryKind::jacobian_general ? general(model, k, x) : quarter(model, k, x));
}

MVec d3_quarter_divergence(const PoissonModel& model, const MVec& z) {
  check_kind(CoboundaryKind::jacobian_const_quarter, model);
  if (z.k() != 3 || z.nvars() != 4) throw DimensionError("input is not a 3-vector on R^4");
  const CrossTuple6 j = jacobian_parts(model).j;
  const Tuple4 dz = calc4::apply_D(calc4::to_tuple4(z));
  return oriented(top(calc4::div(calc4::barcross(dz, j)) * Rational(-1, 4)));
}

calc4::DerivationTuple hamiltonian_operators(const PoissonModel& model) {
  if (model.nvars != 4) throw DimensionError("operator tuple needs a model on R^4");
  calc4::DerivationTuple ops;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) ops.fields[i][j] = -bracket(model, static_cast<int>(i), static_cast<int>(j));
  }
  return ops;
}

// ---------------------------------------------------------------- fold model

Poly fold_hamiltonian(int i, const Poly& f) {
  const auto x = [](int t) { return Poly::variable(4, t); };
  switch (i) {
    case 0: return Poly(4);
    case 1: return x(3) * f.derivative(2) - x(2) * f.derivative(3);
    case 2: return -(x(1) * f.derivative(3) + x(3) * f.derivative(1));
    case 3: return x(1) * f.derivative(2) + x(2) * f.derivative(1);
    default: throw DimensionError("fold Hamiltonian index out of range");
  }
}

MVec d_fold_split(FoldPart part, const MVec& x) {
  if (x.nvars() != 4) throw DimensionError("fold coboundaries act on R^4");
  const int want = (part == FoldPart::d11 || part == FoldPart::d12) ? 1 : 2;
  if (x.k() != want) throw DimensionError("fold split piece applied to a multivector of the wrong degree");
  MVec out(4, want + 1);
  switch (part) {
    case FoldPart::d11:
      for (int i = 1; i <= 3; ++i) out.at_mask(mask_of({0, i})) = fold_hamiltonian(i, x.at_mask(mask_of({0})));
      break;
    case FoldPart::d12:
      for (const auto& [i, j, k] : kTransversePairs) {
        Poly c = fold_hamiltonian(j, x.at_mask(mask_of({i}))) - fold_hamiltonian(i, x.at_mask(mask_of({j})));
        c += x.at_mask(mask_of({k})) * Rational(parity_sign((i + j + 2) / 2));
        out.at_mask(mask_of({i, j})) = std::move(c);
      }
      break;
    case FoldPart::d21:
      for (const auto& [i, j, k] : kTransversePairs) {
        Poly c = fold_hamiltonian(i, x.at_mask(mask_of({0, j}))) - fold_hamiltonian(j, x.at_mask(mask_of({0, i})));
        c += x.at_mask(mask_of({0, k})) * Rational(parity_sign((i + j) / 2));
        out.at_mask(mask_of({0, i, j})) = std::move(c);
      }
      break;
    case FoldPart::d22: {
      Poly c(4);
      for (const auto& [j, k, i] : kTransversePairs) {
        Poly t = fold_hamiltonian(i, x.at_mask(mask_of({j, k})));
        c += parity_sign(i) > 0 ? t : -t;
      }
      out.at_mask(mask_of({1, 2, 3})) = std::move(c);
      break;
    }
  }
  return out;
}

MVec d_fold(int k, const MVec& x) {
  if (k < 0 || k > 3) throw UsageError("fold coboundaries are defined for k = 0..3");
  if (x.k() != k || x.nvars() != 4) throw DimensionError("input is not a " + std::to_string(k) + "-vector on R^4");
  switch (k) {
    case 0: {
      MVec out(4, 1);
      for (int i = 1; i <= 3; ++i) out[static_cast<std::size_t>(i)] = -fold_hamiltonian(i, x[0]);
      return out;
    }
    case 1:
      return d_fold_split(FoldPart::d11, x) + d_fold_split(FoldPart::d12, x);
    case 2:
      return d_fold_split(FoldPart::d21, x) + d_fold_split(FoldPart::d22, x);
    default: {
      Poly c(4);
      for (const auto& [i, j, kk] : kTransversePairs) {
        Poly t = fold_hamiltonian(kk, x.at_mask(mask_of({0, i, j})));
        c += parity_sign(kk + 1) > 0 ? t : -t;
      }
      return top(c);
    }
  }
}

MVec wedge_circle(const MVec& x) { return wedge(x, MVec::basis(x.nvars(), 1U)); }

}  // namespace blf
