#include "blf/mvfield.hpp"

#include <array>
#include <bit>

#include "blf/errors.hpp"

namespace blf {

namespace {

struct SubsetTables {
  // masks[n][k]: lexicographic k-subsets of {0..n-1}; index[n][mask]: position.
  std::array<std::array<std::vector<unsigned>, kMaxVars + 1>, kMaxVars + 1> masks;
  std::array<std::array<std::size_t, 1U << kMaxVars>, kMaxVars + 1> index{};

  SubsetTables() {
    for (int n = 0; n <= kMaxVars; ++n) {
      for (int k = 0; k <= n; ++k) {
        auto& out = masks[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start) -> void {
          if (static_cast<int>(pick.size()) == k) {
            unsigned m = 0;
            for (int i : pick) m |= 1U << static_cast<unsigned>(i);
            index[static_cast<std::size_t>(n)][m] = out.size();
            out.push_back(m);
            return;
          }
          for (int i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
          }
        };
        rec(rec, 0);
      }
    }
  }
};

const SubsetTables& tables() {
  static const SubsetTables t;
  return t;
}

int popcount(unsigned m) { return std::popcount(m); }

// (-1)^{number of elements of mask above i}: moves d_i to the right end.
int right_sign(unsigned mask, int i) {
  return popcount(mask >> static_cast<unsigned>(i + 1)) % 2 == 0 ? 1 : -1;
}

// (-1)^{number of elements of mask below i}: moves d_i to the left end.
int left_sign(unsigned mask, int i) {
  return popcount(mask & ((1U << static_cast<unsigned>(i)) - 1U)) % 2 == 0 ? 1 : -1;
}

std::size_t binomial_slots(int n, int k) { return basis_subsets(n, k).size(); }

}  // namespace

std::span<const unsigned> basis_subsets(int nvars, int k) {
  if (nvars < 0 || nvars > kMaxVars) throw DimensionError("unsupported variable count");
  if (k < 0 || k > nvars) return {};
  return tables().masks[static_cast<std::size_t>(nvars)][static_cast<std::size_t>(k)];
}

std::size_t subset_index(int nvars, unsigned mask) {
  if (nvars < 0 || nvars > kMaxVars || mask >= (1U << static_cast<unsigned>(nvars))) {
    throw DimensionError("index set out of range");
  }
  return tables().index[static_cast<std::size_t>(nvars)][mask];
}

int merge_sign(unsigned left, unsigned right) {
  int inversions = 0;
  for (unsigned r = right; r != 0; r &= r - 1) {
    const int j = std::countr_zero(r);
    inversions += popcount(left >> static_cast<unsigned>(j + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- MVec

MVec::MVec(int nvars, int k) : nvars_(nvars), k_(k), coeffs_(binomial_slots(nvars, k), Poly(nvars)) {}

MVec::MVec(int nvars, int k, std::vector<Poly> coeffs) : nvars_(nvars), k_(k), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != binomial_slots(nvars, k)) throw DimensionError("coefficient tuple has wrong length");
  for (const auto& c : coeffs_) {
    if (c.nvars() != nvars) throw DimensionError("coefficient has wrong variable count");
  }
}

MVec MVec::function(const Poly& f) { return MVec(f.nvars(), 0, {f}); }

MVec MVec::basis(int nvars, unsigned mask, const Poly& coeff) {
  MVec out(nvars, popcount(mask));
  out.at_mask(mask) = coeff;
  return out;
}

MVec MVec::basis(int nvars, unsigned mask) { return basis(nvars, mask, Poly::constant(nvars, 1)); }

bool MVec::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

int MVec::degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

void MVec::check_same(const MVec& other) const {
  if (nvars_ != other.nvars_ || k_ != other.k_) throw DimensionError("multivector shapes differ");
}

MVec& MVec::operator+=(const MVec& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

MVec& MVec::operator-=(const MVec& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

MVec& MVec::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

MVec& MVec::operator*=(const Poly& f) {
  for (auto& p : coeffs_) p = f * p;
  return *this;
}

MVec MVec::operator-() const {
  MVec out = *this;
  for (auto& p : out.coeffs_) p = -p;
  return out;
}

MVec MVec::derivative(int i) const {
  MVec out(nvars_, k_);
  for (std::size_t s = 0; s < coeffs_.size(); ++s) out.coeffs_[s] = coeffs_[s].derivative(i);
  return out;
}

MVec MVec::homogeneous_part(int d) const {
  MVec out(nvars_, k_);
  for (std::size_t s = 0; s < coeffs_.size(); ++s) out.coeffs_[s] = homogeneous_component(coeffs_[s], d);
  return out;
}

// ---------------------------------------------------------------- products

MVec wedge(const MVec& x, const MVec& y) {
  if (x.nvars() != y.nvars()) throw DimensionError("wedge of multivectors on different spaces");
  const int n = x.nvars();
  MVec out(n, x.k() + y.k());
  if (out.overflow()) return out;
  const auto xs = basis_subsets(n, x.k());
  const auto ys = basis_subsets(n, y.k());
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < ys.size(); ++b) {
      if ((xs[a] & ys[b]) != 0 || y[b].is_zero()) continue;
      Poly term = x[a] * y[b];
      if (merge_sign(xs[a], ys[b]) < 0) {
        out.at_mask(xs[a] | ys[b]) -= term;
      } else {
        out.at_mask(xs[a] | ys[b]) += term;
      }
    }
  }
  return out;
}

MVec schouten(const MVec& p, const MVec& q) {
  if (p.nvars() != q.nvars()) throw DimensionError("bracket of multivectors on different spaces");
  const int n = p.nvars();
  MVec out(n, p.k() + q.k() - 1);
  if (out.slots() == 0) return out;
  const auto ps = basis_subsets(n, p.k());
  const auto qs = basis_subsets(n, q.k());

  std::vector<std::array<Poly, kMaxVars>> dq(qs.size());
  for (std::size_t b = 0; b < qs.size(); ++b) {
    for (int i = 0; i < n; ++i) dq[b][static_cast<std::size_t>(i)] = q[b].derivative(i);
  }

  for (std::size_t a = 0; a < ps.size(); ++a) {
    if (p[a].is_zero()) continue;
    const unsigned pm = ps[a];
    std::array<Poly, kMaxVars> dp;
    for (int i = 0; i < n; ++i) dp[static_cast<std::size_t>(i)] = p[a].derivative(i);
    for (std::size_t b = 0; b < qs.size(); ++b) {
      const unsigned qm = qs[b];
      for (int i = 0; i < n; ++i) {
        const unsigned bit = 1U << static_cast<unsigned>(i);
        // (P d/dxi_i) ^ d_i Q
        if ((pm & bit) != 0 && !dq[b][static_cast<std::size_t>(i)].is_zero()) {
          const unsigned rest = pm & ~bit;
          if ((rest & qm) == 0) {
            const int s = right_sign(pm, i) * merge_sign(rest, qm);
            Poly term = p[a] * dq[b][static_cast<std::size_t>(i)];
            if (s > 0) {
              out.at_mask(rest | qm) += term;
            } else {
              out.at_mask(rest | qm) -= term;
            }
          }
        }
        // - d_i P ^ (d/dxi_i Q)
        if ((qm & bit) != 0 && !q[b].is_zero() && !dp[static_cast<std::size_t>(i)].is_zero()) {
          const unsigned rest = qm & ~bit;
          if ((pm & rest) == 0) {
            const int s = -left_sign(qm, i) * merge_sign(pm, rest);
            Poly term = dp[static_cast<std::size_t>(i)] * q[b];
            if (s > 0) {
              out.at_mask(pm | rest) += term;
            } else {
              out.at_mask(pm | rest) -= term;
            }
          }
        }
      }
    }
  }
  return out;
}

MVec lichnerowicz_d(const MVec& pi, const MVec& x) {
  if (pi.k() != 2) throw UsageError("Lichnerowicz differential needs a bivector");
  return schouten(pi, x);
}

// ---------------------------------------------------------------- forms

VolumeForm::VolumeForm(int nvars, Rational scale) : nvars_(nvars), scale_(std::move(scale)) {
  if (scale_ == 0) throw UsageError("volume form must be nonzero");
}

namespace {

unsigned full_mask(int n) { return (1U << static_cast<unsigned>(n)) - 1U; }

}  // namespace

Form star_contract(const MVec& x, const VolumeForm& omega) {
  const int n = x.nvars();
  if (omega.nvars() != n) throw DimensionError("volume form dimension mismatch");
  MVec out(n, n - x.k());
  const auto xs = basis_subsets(n, x.k());
  for (std::size_t a = 0; a < xs.size(); ++a) {
    const unsigned rest = full_mask(n) & ~xs[a];
    // i_{d_I} dx_{0..n-1} = sign(I, I^c) dx_{I^c}
    Rational c = omega.scale() * merge_sign(xs[a], rest);
    out.at_mask(rest) = x[a] * c;
  }
  return Form{std::move(out)};
}

MVec star_inverse(const Form& form, const VolumeForm& omega) {
  const MVec& f = form.coefficients;
  const int n = f.nvars();
  if (omega.nvars() != n) throw DimensionError("volume form dimension mismatch");
  MVec out(n, n - f.k());
  const auto fs = basis_subsets(n, f.k());
  for (std::size_t a = 0; a < fs.size(); ++a) {
    const unsigned vec = full_mask(n) & ~fs[a];
    Rational c = 1 / (omega.scale() * merge_sign(vec, fs[a]));
    out.at_mask(vec) = f[a] * c;
  }
  return out;
}

MVec modular_vf(const MVec& pi, const VolumeForm& omega) {
  if (pi.k() != 2) throw UsageError("modular vector field needs a bivector");
  const int n = pi.nvars();
  if (omega.nvars() != n) throw DimensionError("volume form dimension mismatch");
  MVec y(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const unsigned mask = (1U << static_cast<unsigned>(i)) | (1U << static_cast<unsigned>(j));
      Poly d = pi.at_mask(mask).derivative(i);
      // pi_ij = +coeff when i < j, -coeff otherwise
      if (i < j) {
        y[static_cast<std::size_t>(j)] += d;
      } else {
        y[static_cast<std::size_t>(j)] -= d;
      }
    }
  }
  return y;
}

MVec euler_field(int nvars) {
  MVec e(nvars, 1);
  for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = Poly::variable(nvars, i);
  return e;
}

}  // namespace blf
