#include "blf/cohomology.hpp"

#include <algorithm>
#include <functional>

#include "blf/calc4.hpp"
#include "blf/errors.hpp"

namespace blf {

namespace {

Poly x4(int i) { return Poly::variable(4, i); }

// (nu_0, ..., nu_6) = (1, x1, x2, x3, x4, x1 x2, x3 x4)
std::vector<Poly> nu() {
  return {Poly::constant(4, 1), x4(0), x4(1), x4(2), x4(3), x4(0) * x4(1), x4(2) * x4(3)};
}

const char* const kNuNames[] = {"1", "x1", "x2", "x3", "x4", "x1x2", "x3x4"};

std::string nu_name(std::size_t i) { return kNuNames[i]; }

// Insert `columns` into a fresh basis and return it.
EchelonBasis span_of(const std::vector<SparseVector<Rational>>& columns) {
  EchelonBasis basis;
  std::vector<const SparseVector<Rational>*> order;
  for (const auto& c : columns) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->size() < b->size(); });
  for (const auto* c : order) basis.insert(*c);
  return basis;
}

std::optional<GradedMatrix> image_into(const PoissonModel& model, CoboundaryKind kind, int k, int d) {
  const int src = d - degree_shift(model);
  if (k <= 0 || src < 0) return std::nullopt;
  return graded_matrix(model, kind, k - 1, src);
}

}  // namespace

// ---------------------------------------------------------------- GradedBasis

GradedBasis::GradedBasis(int nvars, int k, int degree)
    : nvars_(nvars),
      k_(k),
      degree_(degree),
      slots_(basis_subsets(nvars, k).size()),
      monomials_(degree >= 0 ? monomial_basis(nvars, degree) : std::vector<Monomial>{}) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) position_.emplace(monomials_[i].key(), static_cast<std::uint32_t>(i));
}

MVec GradedBasis::element(std::size_t index) const {
  const std::size_t slot = index / monomials_.size();
  MVec x(nvars_, k_);
  x[slot] = Poly::term(nvars_, monomials_[index % monomials_.size()]);
  return x;
}

SparseVector<Rational> GradedBasis::coordinates(const MVec& x) const {
  if (x.nvars() != nvars_ || x.k() != k_) throw DimensionError("multivector does not belong to this graded piece");
  SparseVector<Rational> out;
  const std::size_t m = monomials_.size();
  for (std::size_t s = 0; s < x.slots(); ++s) {
    for (const auto& [mono, c] : x[s].terms()) {
      auto it = position_.find(mono.key());
      if (it == position_.end()) throw StructureError("component outside degree " + std::to_string(degree_));
      out.emplace_back(static_cast<std::uint32_t>(s * m + it->second), c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------- matrices

int degree_shift(const PoissonModel& model) {
  if (model.coeff_degree < 0) throw UsageError(model.name + ": graded cohomology needs homogeneous coefficients");
  return model.coeff_degree - 1;
}

GradedMatrix operator_matrix(const GradedBasis& source, const GradedBasis& target,
                             const std::function<MVec(const MVec&)>& map) {
  GradedMatrix m;
  m.k = source.k();
  m.in_degree = source.degree();
  m.out_degree = target.degree();
  m.rows = target.size();
  m.cols = source.size();
  m.columns.reserve(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) m.columns.push_back(target.coordinates(map(source.element(c))));
  return m;
}

GradedMatrix graded_matrix(const PoissonModel& model, CoboundaryKind kind, int k, int d) {
  check_kind(kind, model);
  if (k < 0 || k > model.nvars) throw UsageError("k out of range");
  if (d < 0) throw UsageError("degree must be non-negative");
  const GradedBasis source(model.nvars, k, d);
  const GradedBasis target(model.nvars, k + 1, d + degree_shift(model));
  if (k == model.nvars) {
    // d^n maps into the zero space
    GradedMatrix m;
    m.k = k;
    m.in_degree = d;
    m.out_degree = d + degree_shift(model);
    m.cols = source.size();
    m.columns.assign(m.cols, {});
    return m;
  }
  return operator_matrix(source, target, [&](const MVec& x) { return coboundary(kind, model, x); });
}

std::size_t exact_rank(const GradedMatrix& m) { return exact_rank(m.columns); }

GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols != b.rows) throw DimensionError("matrix shapes do not compose");
  GradedMatrix out;
  out.k = b.k;
  out.in_degree = b.in_degree;
  out.out_degree = a.out_degree;
  out.rows = a.rows;
  out.cols = b.cols;
  for (const auto& col : b.columns) {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [j, x] : col) {
      for (const auto& [i, y] : a.columns[j]) acc[i] += x * y;
    }
    SparseVector<Rational> v;
    for (auto& [i, x] : acc) {
      if (x != 0) v.emplace_back(i, std::move(x));
    }
    out.columns.push_back(std::move(v));
  }
  return out;
}

bool is_zero(const GradedMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& c) { return c.empty(); });
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
}

// ---------------------------------------------------------------- Hilbert series

HilbertSeries hilbert_free_module(const std::vector<int>& generator_degrees, const std::vector<int>& casimir_degrees,
                                  int d_max) {
  if (d_max < 0) throw UsageError("truncation degree must be non-negative");
  for (int c : casimir_degrees) {
    if (c <= 0) throw UsageError("Casimir degrees must be positive");
  }
  const auto n = static_cast<std::size_t>(d_max + 1);
  std::vector<long> series(n, 0);
  for (int g : generator_degrees) {
    if (g < 0) throw UsageError("generator degrees must be non-negative");
    if (g <= d_max) ++series[static_cast<std::size_t>(g)];
  }
  for (int c : casimir_degrees) {
    // multiply by 1 / (1 - t^c)
    for (std::size_t d = static_cast<std::size_t>(c); d < n; ++d) series[d] += series[d - static_cast<std::size_t>(c)];
  }
  return HilbertSeries{generator_degrees, casimir_degrees, series};
}

// ---------------------------------------------------------------- Betti tables

const BettiCell& BettiReport::at(int k, int degree) const {
  for (const auto& c : cells) {
    if (c.k == k && c.degree == degree) return c;
  }
  throw UsageError("no Betti cell (" + std::to_string(k) + ", " + std::to_string(degree) + ")");
}

bool BettiReport::all_match() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const BettiCell& c) { return !c.predicted || *c.predicted == c.computed; });
}

BettiReport betti_table(const PoissonModel& model, CoboundaryKind kind, int k_max, int d_max) {
  check_kind(kind, model);
  if (k_max < 0 || k_max > model.nvars) throw UsageError("k_max out of range");
  BettiReport report;
  report.model = model.name;
  const int shift = degree_shift(model);
  // rank[k][d]: rank of d^k at input degree d
  std::vector<std::vector<std::size_t>> rank(static_cast<std::size_t>(k_max + 1));
  for (int k = 0; k <= k_max; ++k) {
    for (int d = 0; d <= d_max; ++d) {
      const GradedMatrix m = graded_matrix(model, kind, k, d);
      rank[static_cast<std::size_t>(k)].push_back(exact_rank(m));
      BettiCell cell;
      cell.k = k;
      cell.degree = d;
      cell.kernel = m.cols - rank[static_cast<std::size_t>(k)].back();
      const int src = d - shift;
      if (k > 0 && src >= 0) cell.image = rank[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(src)];
      cell.computed = static_cast<long>(cell.kernel) - static_cast<long>(cell.image);
      report.cells.push_back(cell);
    }
  }
  if (auto prediction = predicted_modules(model)) attach_predictions(report, *prediction);
  return report;
}

std::optional<FreeModulePrediction> predicted_modules(const PoissonModel& model) {
  if (model.origin == "fold") return FreeModulePrediction{{1, 2}, {{0}, {0}, {}, {0}, {0}}};
  if (model.origin == "lefschetz") {
    return FreeModulePrediction{
        {2, 2},
        {{0}, {1}, {1, 1, 1, 1, 2, 2}, {0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 3, 3}, {0, 1, 1, 1, 1, 2, 2}}};
  }
  return std::nullopt;
}

void attach_predictions(BettiReport& report, const FreeModulePrediction& prediction) {
  int d_max = 0;
  for (const auto& c : report.cells) d_max = std::max(d_max, c.degree);
  for (auto& c : report.cells) {
    if (c.k >= static_cast<int>(prediction.generator_degrees.size())) continue;
    const auto series =
        hilbert_free_module(prediction.generator_degrees[static_cast<std::size_t>(c.k)], prediction.casimir_degrees, d_max);
    c.predicted = series.coefficients[static_cast<std::size_t>(c.degree)];
  }
}

// ---------------------------------------------------------------- generators

std::vector<Generator> fold_generators(int k) {
  switch (k) {
    case 0: return {{"1", MVec::function(Poly::constant(4, 1))}};
    case 1: return {{"d0", MVec::basis(4, 0b0001U)}};
    case 2: return {};
    case 3: return {{"d123", MVec::basis(4, 0b1110U)}};
    case 4: return {{"d0123", MVec::basis(4, 0b1111U)}};
    default: throw UsageError("k out of range");
  }
}

std::vector<Generator> lefschetz_generators(int k) {
  using namespace calc4;
  const auto n = nu();
  const Poly p1 = lefschetz_p1();
  const Poly p2 = lefschetz_p2();
  std::vector<Generator> out;
  switch (k) {
    case 0:
      out.push_back({"1", MVec::function(Poly::constant(4, 1))});
      break;
    case 1:
      out.push_back({"E", euler_field(4)});
      break;
    case 2:
      for (std::size_t i = 1; i <= 5; ++i) {
        out.push_back({"Kinv(grad " + nu_name(i) + " x grad P1)",
                       bivector_field(apply_K_inv(cross(grad(n[i]), grad(p1))))});
      }
      out.push_back({"Kinv(grad P1 x grad P2)", bivector_field(apply_K_inv(cross(grad(p1), grad(p2))))});
      break;
    case 3: {
      for (std::size_t i = 1; i <= 5; ++i) out.push_back({"D(grad " + nu_name(i) + ")", trivector_field(apply_D(grad(n[i])))});
      const MVec dp2 = trivector_field(apply_D(grad(p2)));
      for (std::size_t i = 0; i <= 5; ++i) out.push_back({nu_name(i) + " D(grad P2)", n[i] * dp2});
      const MVec dp1 = trivector_field(apply_D(grad(p1)));
      out.push_back({"D(grad P1)", dp1});
      out.push_back({"x1x2 D(grad P1)", n[5] * dp1});
      break;
    }
    case 4:
      for (std::size_t i = 0; i <= 6; ++i) out.push_back({nu_name(i) + " d1234", MVec::basis(4, 0b1111U, n[i])});
      break;
    default:
      throw UsageError("k out of range");
  }
  return out;
}

std::vector<Generator> model_generators(const PoissonModel& model, int k) {
  if (model.origin == "fold") return fold_generators(k);
  if (model.origin == "lefschetz") return lefschetz_generators(k);
  throw UsageError(model.name + ": no generator list for this model");
}

std::vector<Poly> casimir_monomials(const PoissonModel& model, int d) {
  std::vector<Poly> out;
  if (d < 0) return out;
  std::function<void(std::size_t, int, const Poly&)> rec = [&](std::size_t i, int left, const Poly& acc) {
    if (i == model.casimirs.size()) {
      if (left == 0) out.push_back(acc);
      return;
    }
    const Poly& c = model.casimirs[i];
    if (!c.is_homogeneous() || c.degree() <= 0) throw UsageError("Casimirs must be homogeneous of positive degree");
    Poly p = acc;
    for (int used = 0; used <= left; used += c.degree()) {
      rec(i + 1, left - used, p);
      p = p * c;
    }
  };
  rec(0, d, Poly::constant(model.nvars, 1));
  return out;
}

bool GeneratorReport::pass() const {
  return non_cocycles.empty() &&
         std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.spans() && d.free(); });
}

GeneratorReport verify_generators(const PoissonModel& model, CoboundaryKind kind, int k,
                                  const std::vector<Generator>& generators, int d_max) {
  GeneratorReport report;
  report.k = k;
  std::vector<int> gen_degree;
  for (const auto& g : generators) {
    const int deg = homogeneous_degree(g.field);
    if (deg < 0 && !g.field.is_zero()) throw UsageError("generator " + g.label + " is not homogeneous");
    gen_degree.push_back(deg);
    if (k < model.nvars && !coboundary(kind, model, g.field).is_zero()) report.non_cocycles.push_back(g.label);
  }
  for (int d = 0; d <= d_max; ++d) {
    GeneratorDegreeCheck check;
    check.degree = d;
    const GradedBasis piece(model.nvars, k, d);
    std::vector<SparseVector<Rational>> candidates;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (gen_degree[g] < 0 || gen_degree[g] > d) continue;
      for (const Poly& c : casimir_monomials(model, d - gen_degree[g])) {
        candidates.push_back(piece.coordinates(c * generators[g].field));
      }
    }
    check.candidates = candidates.size();
    const auto image = image_into(model, kind, k, d);
    EchelonBasis basis = image ? span_of(image->columns) : EchelonBasis{};
    const std::size_t image_rank = basis.rank();
    for (const auto& v : candidates) basis.insert(v);
    check.independent = basis.rank() - image_rank;
    const GradedMatrix here = graded_matrix(model, kind, k, d);
    check.betti = static_cast<long>(here.cols - exact_rank(here)) - static_cast<long>(image_rank);
    report.degrees.push_back(check);
  }
  return report;
}

// ---------------------------------------------------------------- cone and fold pieces

long milnor_quotient_dimension(const Poly& f, int d_max) {
  if (!f.is_homogeneous() || f.degree() < 1) throw UsageError("Milnor count needs a homogeneous polynomial");
  const int n = f.nvars();
  const int shift = f.degree() - 1;
  long total = 0;
  for (int e = 0; e <= d_max; ++e) {
    const GradedBasis piece(n, 0, e);
    std::vector<SparseVector<Rational>> ideal;
    if (e - shift >= 0) {
      for (Monomial m : monomial_basis(n, e - shift)) {
        for (int i = 0; i < n; ++i) {
          ideal.push_back(piece.coordinates(MVec::function(Poly::term(n, m) * f.derivative(i))));
        }
      }
    }
    total += static_cast<long>(piece.size()) - static_cast<long>(exact_rank(ideal));
  }
  return total;
}

namespace {

// Subspace of k-vectors on the fold chart whose index sets contain (or avoid) d_0.
struct SlotFilter {
  bool with_circle;
};

std::vector<SparseVector<Rational>> restrict_columns(const GradedMatrix& m, const GradedBasis& basis, unsigned k,
                                                     SlotFilter filter) {
  const auto masks = basis_subsets(4, static_cast<int>(k));
  std::vector<SparseVector<Rational>> out;
  for (std::size_t c = 0; c < m.cols; ++c) {
    const unsigned mask = masks[c / basis.monomial_count()];
    if (((mask & 1U) != 0) == filter.with_circle) out.push_back(m.columns[c]);
  }
  return out;
}

GradedMatrix from_columns(std::vector<SparseVector<Rational>> columns, std::size_t rows) {
  GradedMatrix m;
  m.rows = rows;
  m.cols = columns.size();
  m.columns = std::move(columns);
  return m;
}

// Transverse k-vectors: those without d_0, embedded as a (k)-vector piece of R^4.
GradedMatrix transverse_matrix(int k, int d, const std::function<MVec(const MVec&)>& map, int out_k) {
  const GradedBasis source(4, k, d);
  const GradedBasis target(4, out_k, d);
  const auto masks = basis_subsets(4, k);
  std::vector<SparseVector<Rational>> cols;
  for (std::size_t c = 0; c < source.size(); ++c) {
    if ((masks[c / source.monomial_count()] & 1U) != 0) continue;
    cols.push_back(target.coordinates(map(source.element(c))));
  }
  return from_columns(std::move(cols), target.size());
}

}  // namespace

FoldSplitMatrices fold_split_matrices(int d) {
  FoldSplitMatrices out;
  const GradedBasis functions(4, 0, d);
  const GradedBasis bivectors(4, 2, d);
  // f0 -> d11(f0 d_0) and f0 -> d^0(f0) ^ d_0
  out.d11 = operator_matrix(functions, bivectors,
                            [](const MVec& f) { return d_fold_split(FoldPart::d11, MVec::basis(4, 1U, f[0])); });
  out.circle_d0 = operator_matrix(functions, bivectors, [](const MVec& f) { return wedge_circle(d_fold(0, f)); });
  // transverse Y -> d21(Y ^ d_0) and Y -> d12(Y) ^ d_0
  out.d21_circle = transverse_matrix(1, d, [](const MVec& y) { return d_fold_split(FoldPart::d21, wedge_circle(y)); }, 3);
  out.circle_d12 = transverse_matrix(1, d, [](const MVec& y) { return wedge_circle(d_fold_split(FoldPart::d12, y)); }, 3);
  return out;
}

FoldFirstCohomologySplit fold_h1_split(int d) {
  const GradedBasis functions(4, 0, d);
  const GradedBasis vectors(4, 1, d);
  const GradedBasis bivectors(4, 2, d);
  const GradedMatrix d11 = operator_matrix(
      functions, bivectors, [](const MVec& f) { return d_fold_split(FoldPart::d11, MVec::basis(4, 1U, f[0])); });
  const GradedMatrix d12 = transverse_matrix(1, d, [](const MVec& y) { return d_fold_split(FoldPart::d12, y); }, 2);
  const GradedMatrix d0 = operator_matrix(functions, vectors, [](const MVec& f) { return d_fold(0, f); });
  FoldFirstCohomologySplit out;
  out.casimir_part = static_cast<long>(d11.cols - exact_rank(d11));
  out.transverse_part = static_cast<long>(d12.cols - exact_rank(d12)) - static_cast<long>(exact_rank(d0));
  return out;
}

BettiReport fold_split_betti(int d_max) {
  const PoissonModel fold = model_fold();
  BettiReport report;
  report.model = "fold (split)";
  std::vector<std::vector<std::size_t>> rank(5);
  for (int k = 0; k <= 4; ++k) {
    for (int d = 0; d <= d_max; ++d) {
      std::size_t r = 0;
      std::size_t cols = GradedBasis(4, k, d).size();
      if (k == 1 || k == 2) {
        // d^k is block diagonal: circle slots -> circle slots, transverse slots -> transverse slots
        const FoldPart circle = k == 1 ? FoldPart::d11 : FoldPart::d21;
        const FoldPart transverse = k == 1 ? FoldPart::d12 : FoldPart::d22;
        const GradedBasis source(4, k, d);
        const GradedBasis target(4, k + 1, d);
        const GradedMatrix a = operator_matrix(source, target, [&](const MVec& x) { return d_fold_split(circle, x); });
        const GradedMatrix b =
            operator_matrix(source, target, [&](const MVec& x) { return d_fold_split(transverse, x); });
        r = exact_rank(restrict_columns(a, source, static_cast<unsigned>(k), {true})) +
            exact_rank(restrict_columns(b, source, static_cast<unsigned>(k), {false}));
      } else {
        r = exact_rank(graded_matrix(fold, CoboundaryKind::fold_direct, k, d));
      }
      rank[static_cast<std::size_t>(k)].push_back(r);
      BettiCell cell;
      cell.k = k;
      cell.degree = d;
      cell.kernel = cols - r;
      if (k > 0) cell.image = rank[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(d)];
      cell.computed = static_cast<long>(cell.kernel) - static_cast<long>(cell.image);
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace blf
