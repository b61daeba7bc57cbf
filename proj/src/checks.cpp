#include "blf/checks.hpp"

#include <functional>
#include <sstream>

#include "blf/calc4.hpp"
#include "blf/errors.hpp"
#include "blf/random.hpp"

namespace blf {

using calc4::CrossTuple6;
using calc4::Tuple4;

namespace {

struct Inputs {
  Tuple4 u4, y4, z4;
  CrossTuple6 u6, y6, z6;
  Poly f;
};

Tuple4 random4(RandomSource& rng, int deg) {
  Tuple4 t;
  for (std::size_t i = 0; i < 4; ++i) t[i] = rng.poly(4, deg);
  return t;
}

CrossTuple6 random6(RandomSource& rng, int deg) {
  CrossTuple6 t;
  for (std::size_t i = 0; i < 6; ++i) t[i] = rng.poly(4, deg);
  return t;
}

struct Identity {
  std::string name;
  std::function<bool(const Inputs&)> holds;
};

std::vector<Identity> identities() {
  using namespace calc4;
  return {
      {"phi(u).y = u.phi(y)", [](const Inputs& in) { return dot(apply_phi(in.u6), in.y6) == dot(in.u6, apply_phi(in.y6)); }},
      {"phi(u).phi(y) = u.y",
       [](const Inputs& in) { return dot(apply_phi(in.u6), apply_phi(in.y6)) == dot(in.u6, in.y6); }},
      {"u.(y x z) = y.(z barx phi(u))",
       [](const Inputs& in) { return dot(in.u6, cross(in.y4, in.z4)) == dot(in.y4, barcross(in.z4, apply_phi(in.u6))); }},
      {"(u x z).phi(u x y) = 0",
       [](const Inputs& in) { return dot(cross(in.u4, in.z4), apply_phi(cross(in.u4, in.y4))).is_zero(); }},
      {"u barx (y x z) = y barx (z x u)",
       [](const Inputs& in) { return barcross(in.u4, cross(in.y4, in.z4)) == barcross(in.y4, cross(in.z4, in.u4)); }},
      {"z barx phi(u x y) = -(z.u) y + (z.y) u",
       [](const Inputs& in) {
         return barcross(in.z4, apply_phi(cross(in.u4, in.y4))) == dot(in.z4, in.y4) * in.u4 - dot(in.z4, in.u4) * in.y4;
       }},
      {"(u barx z) barx phi(u x y) = -(z.phi(u x y)) u",
       [](const Inputs& in) {
         const CrossTuple6 w = apply_phi(cross(in.u4, in.y4));
         return barcross(barcross(in.u4, in.z6), w) == -dot(in.z6, w) * in.u4;
       }},
      {"nabla barx (u x y) = y barx (nabla x u) - u barx (nabla x y)",
       [](const Inputs& in) {
         return nabla_barcross(cross(in.u4, in.y4)) ==
                barcross(in.y4, nabla_cross(in.u4)) - barcross(in.u4, nabla_cross(in.y4));
       }},
      {"nabla x (F u) = grad F x u + F (nabla x u)",
       [](const Inputs& in) {
         return nabla_cross(in.f * in.u4) == cross(grad(in.f), in.u4) + in.f * nabla_cross(in.u4);
       }},
      {"nabla barx (F y) = grad F barx y + F (nabla barx y)",
       [](const Inputs& in) {
         return nabla_barcross(in.f * in.y6) == barcross(grad(in.f), in.y6) + in.f * nabla_barcross(in.y6);
       }},
      {"Div(F u) = grad F . u + F Div(u)",
       [](const Inputs& in) { return div(in.f * in.u4) == dot(grad(in.f), in.u4) + in.f * div(in.u4); }},
      {"Div(u barx y) = y.phi(nabla x u) - u.(nabla barx y)",
       [](const Inputs& in) {
         return div(barcross(in.u4, in.y6)) ==
                dot(in.y6, apply_phi(nabla_cross(in.u4))) - dot(in.u4, nabla_barcross(in.y6));
       }},
      {"constant matrices: star^2 = phi^2 = Id, D^2 = -Id, K Kinv = Kinv K = Id",
       [](const Inputs& in) {
         return hodge2(hodge2(in.u6)) == in.u6 && apply_phi(apply_phi(in.u6)) == in.u6 &&
                apply_D(apply_D(in.u4)) == -in.u4 && apply_K(apply_K_inv(in.u6)) == in.u6 &&
                apply_K_inv(apply_K(to_wedge_order(in.y6))) == to_wedge_order(in.y6);
       }},
  };
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<CheckResult> identity_suites(int trials, std::uint64_t seed, int max_degree) {
  RandomSource rng(seed);
  const auto list = identities();
  std::vector<int> failures(list.size(), 0);
  for (int t = 0; t < trials; ++t) {
    Inputs in{random4(rng, max_degree), random4(rng, max_degree), random4(rng, max_degree),
              random6(rng, max_degree), random6(rng, max_degree), random6(rng, max_degree),
              rng.poly(4, max_degree)};
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].holds(in)) ++failures[i];
    }
  }
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back({"identity: " + list[i].name, failures[i] == 0,
                   std::to_string(trials - failures[i]) + "/" + std::to_string(trials) + " trials hold"});
  }
  return out;
}

std::vector<CheckResult> oracle_checks(const PoissonModel& model, int trials, std::uint64_t seed, int d_max) {
  using Formula = std::function<MVec(const MVec&)>;
  std::vector<std::pair<std::string, std::function<Formula(int)>>> formulas;
  auto kind_formula = [&model](CoboundaryKind kind) {
    return [&model, kind](int) -> Formula { return [&model, kind](const MVec& x) { return coboundary(kind, model, x); }; };
  };
  if (model.family == ModelFamily::fold) formulas.emplace_back("fold_direct", kind_formula(CoboundaryKind::fold_direct));
  if (model.jacobian) {
    formulas.emplace_back("jacobian_general", kind_formula(CoboundaryKind::jacobian_general));
    if (model.jacobian->mu == Poly::constant(4, Rational(-1, 4))) {
      formulas.emplace_back("jacobian_const_quarter", kind_formula(CoboundaryKind::jacobian_const_quarter));
      formulas.emplace_back("jacobian_const_quarter (divergence form of d3)", [&model](int k) -> Formula {
        if (k != 3) return nullptr;
        return [&model](const MVec& x) { return d3_quarter_divergence(model, x); };
      });
    }
  }
  if (formulas.empty()) throw UsageError(model.name + ": no closed-form coboundary to compare");

  RandomSource rng(seed);
  std::vector<CheckResult> out;
  for (const auto& [label, make] : formulas) {
    for (int k = 0; k <= 3; ++k) {
      const Formula f = make(k);
      if (!f) continue;
      int compared = 0;
      std::vector<std::string> failures;
      for (int d = 0; d <= d_max; ++d) {
        for (int t = 0; t < trials; ++t) {
          const MVec x = rng.homogeneous_mvec(model.nvars, k, d);
          ++compared;
          if (f(x) != schouten(model.pi, x)) failures.push_back("degree " + std::to_string(d) + " trial " + std::to_string(t));
        }
      }
      std::string details = std::to_string(compared - static_cast<int>(failures.size())) + "/" +
                            std::to_string(compared) + " inputs equal the bracket";
      if (!failures.empty()) details += "; first mismatch at " + failures.front();
      out.push_back({"oracle " + label + " k=" + std::to_string(k), failures.empty(), details});
    }
  }
  return out;
}

std::vector<CheckResult> complex_checks(const PoissonModel& model, CoboundaryKind kind, int d_max) {
  const int shift = degree_shift(model);
  std::vector<CheckResult> out;
  for (int k = 0; k + 1 < model.nvars; ++k) {
    std::vector<std::string> bad;
    for (int d = 0; d <= d_max; ++d) {
      const GradedMatrix first = graded_matrix(model, kind, k, d);
      const GradedMatrix second = graded_matrix(model, kind, k + 1, d + shift);
      if (!is_zero(multiply(second, first))) bad.push_back(std::to_string(d));
    }
    out.push_back({"d" + std::to_string(k + 1) + " d" + std::to_string(k) + " = 0 (" + std::string(kind_name(kind)) + ")",
                   bad.empty(),
                   bad.empty() ? "degrees 0.." + std::to_string(d_max) : "nonzero at degrees " + join(bad)});
  }
  return out;
}

std::vector<CheckResult> betti_checks(const BettiReport& report) {
  std::vector<CheckResult> out;
  int k_max = -1;
  for (const auto& c : report.cells) k_max = std::max(k_max, c.k);
  for (int k = 0; k <= k_max; ++k) {
    std::ostringstream computed;
    std::ostringstream predicted;
    bool pass = true;
    bool any_prediction = false;
    for (const auto& c : report.cells) {
      if (c.k != k) continue;
      computed << (computed.tellp() > 0 ? "," : "") << c.computed;
      predicted << (predicted.tellp() > 0 ? "," : "") << (c.predicted ? std::to_string(*c.predicted) : "?");
      if (c.predicted) {
        any_prediction = true;
        pass = pass && *c.predicted == c.computed;
      }
    }
    if (!any_prediction) continue;
    out.push_back({report.model + " H" + std::to_string(k) + " dimensions", pass,
                   "computed " + computed.str() + "; predicted " + predicted.str()});
  }
  return out;
}

std::vector<CheckResult> generator_checks(const PoissonModel& model, CoboundaryKind kind, int k_max, int d_max) {
  std::vector<CheckResult> out;
  for (int k = 0; k <= k_max; ++k) {
    const auto gens = model_generators(model, k);
    const GeneratorReport r = verify_generators(model, kind, k, gens, d_max);
    std::ostringstream details;
    details << gens.size() << " generators";
    if (!r.non_cocycles.empty()) details << "; not cocycles: " << join(r.non_cocycles);
    details << "; per degree independent/candidates/dim H:";
    for (const auto& d : r.degrees) details << " " << d.independent << "/" << d.candidates << "/" << d.betti;
    out.push_back({model.name + " H" + std::to_string(k) + " generators", r.pass(), details.str()});
  }
  return out;
}

std::vector<CheckResult> structural_checks(const PoissonModel& fold, const PoissonModel& lefschetz, int fold_d_max,
                                           int lefschetz_d_max) {
  std::vector<CheckResult> out;
  for (const PoissonModel* m : {&fold, &lefschetz}) {
    const VolumeForm vol(4);
    out.push_back({m->name + " modular vector field vanishes", modular_vf(m->pi, vol).is_zero(), ""});
    out.push_back({m->name + " pi ^ pi = 0", wedge(m->pi, m->pi).is_zero(), ""});
  }
  out.push_back({"involution fixes the fold bivector", involution_pushforward(fold.pi) == fold.pi, ""});
  for (const PoissonModel* m : {&fold, &lefschetz}) {
    const int d_max = m == &fold ? fold_d_max : lefschetz_d_max;
    const BettiReport base = betti_table(*m, compact_kind(*m), m->nvars, d_max);
    for (const Rational& c : {Rational(3), Rational(-1, 4)}) {
      const PoissonModel scaled = scale_model(*m, c);
      const BettiReport other = betti_table(scaled, CoboundaryKind::schouten, m->nvars, d_max);
      bool same = base.cells.size() == other.cells.size();
      for (std::size_t i = 0; same && i < base.cells.size(); ++i) same = base.cells[i].computed == other.cells[i].computed;
      out.push_back({m->name + " Betti table invariant under scaling by " + to_string(c), same,
                     "degrees 0.." + std::to_string(d_max)});
    }
  }
  return out;
}

std::vector<CheckResult> cone_checks(int d_max) {
  std::vector<CheckResult> out;
  const PoissonModel cone = restrict_to_3d();
  const BettiReport r = betti_table(cone, CoboundaryKind::schouten, 3, d_max);
  for (int k : {1, 2}) {
    std::string row;
    bool zero = true;
    for (int d = 0; d <= d_max; ++d) {
      row += (row.empty() ? "" : ",") + std::to_string(r.at(k, d).computed);
      zero = zero && r.at(k, d).computed == 0;
    }
    out.push_back({"cone H" + std::to_string(k) + " vanishes", zero, "dimensions " + row});
  }
  const long milnor = milnor_quotient_dimension(cone.casimirs.front(), 2);
  out.push_back({"cone Milnor number is 1", milnor == 1, "quotient dimension " + std::to_string(milnor)});

  std::vector<std::string> bad11;
  std::vector<std::string> bad21;
  for (int d = 0; d <= d_max; ++d) {
    const FoldSplitMatrices m = fold_split_matrices(d);
    if (!(m.d11 == m.circle_d0)) bad11.push_back(std::to_string(d));
    if (!(m.d21_circle == m.circle_d12)) bad21.push_back(std::to_string(d));
  }
  out.push_back({"fold split: d11 = d0 (under ^ d_0)", bad11.empty(),
                 bad11.empty() ? "degrees 0.." + std::to_string(d_max) : "differs at " + join(bad11)});
  out.push_back({"fold split: d12 = d21 (under ^ d_0)", bad21.empty(),
                 bad21.empty() ? "degrees 0.." + std::to_string(d_max) : "differs at " + join(bad21)});
  return out;
}

}  // namespace blf
