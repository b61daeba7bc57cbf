#include "blf/calc4.hpp"

#include "blf/errors.hpp"

namespace blf::calc4 {

namespace {

using Mat4 = std::array<std::array<int, 4>, 4>;
using Mat6 = std::array<std::array<int, 6>, 6>;

constexpr Mat6 kStar = {{{0, 0, -1, 0, 0, 0},
                         {0, 0, 0, 1, 0, 0},
                         {-1, 0, 0, 0, 0, 0},
                         {0, 1, 0, 0, 0, 0},
                         {0, 0, 0, 0, 0, 1},
                         {0, 0, 0, 0, 1, 0}}};

constexpr Mat4 kD = {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};

constexpr Mat6 kK = {{{0, 0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0, 1},
                      {0, 0, -1, 0, 0, 0},
                      {1, 0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 1, 0},
                      {0, -1, 0, 0, 0, 0}}};

constexpr Mat6 kKInv = {{{0, 0, 0, 1, 0, 0},
                         {0, 0, 0, 0, 0, -1},
                         {0, 0, -1, 0, 0, 0},
                         {1, 0, 0, 0, 0, 0},
                         {0, 0, 0, 0, 1, 0},
                         {0, 1, 0, 0, 0, 0}}};

template <class Out, class In, std::size_t N>
Out apply_matrix(const std::array<std::array<int, N>, N>& m, const In& x) {
  Out out;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (m[i][j] == 1) {
        out[i] += x[j];
      } else if (m[i][j] == -1) {
        out[i] -= x[j];
      } else if (m[i][j] != 0) {
        out[i] += x[j] * Rational(m[i][j]);
      }
    }
  }
  return out;
}

void require_four(const MVec& x, int k) {
  if (x.nvars() != 4 || x.k() != k) throw DimensionError("expected a " + std::to_string(k) + "-vector on R^4");
}

}  // namespace

Poly DerivationTuple::apply(std::size_t k, const Poly& g) const {
  Poly out(4);
  for (std::size_t j = 0; j < 4; ++j) {
    const Poly& c = fields[k][j];
    if (!c.is_zero()) out += c * g.derivative(static_cast<int>(j));
  }
  return out;
}

// ---------------------------------------------------------------- encodings

Tuple4 to_tuple4(const MVec& x) {
  if (x.nvars() != 4 || (x.k() != 1 && x.k() != 3)) throw DimensionError("expected a 1- or 3-vector on R^4");
  Tuple4 t;
  for (std::size_t i = 0; i < 4; ++i) t[i] = x[i];
  return t;
}

Tuple6 to_tuple6(const MVec& x) {
  require_four(x, 2);
  Tuple6 t;
  for (std::size_t i = 0; i < 6; ++i) t[i] = x[i];
  return t;
}

MVec vector_field(const Tuple4& t) { return MVec(4, 1, {t.begin(), t.end()}); }
MVec trivector_field(const Tuple4& t) { return MVec(4, 3, {t.begin(), t.end()}); }
MVec bivector_field(const Tuple6& t) { return MVec(4, 2, {t.begin(), t.end()}); }

Tuple6 to_wedge_order(const CrossTuple6& c) {
  Tuple6 w;
  w[2] = c[0];
  w[0] = c[1];
  w[3] = -c[2];
  w[5] = c[3];
  w[1] = -c[4];
  w[4] = c[5];
  return w;
}

CrossTuple6 to_cross_order(const Tuple6& w) {
  CrossTuple6 c;
  c[0] = w[2];
  c[1] = w[0];
  c[2] = -w[3];
  c[3] = w[5];
  c[4] = -w[1];
  c[5] = w[4];
  return c;
}

// ---------------------------------------------------------------- calculus

Tuple4 grad(const Poly& f) {
  if (f.nvars() != 4) throw DimensionError("gradient expects a polynomial on R^4");
  Tuple4 t;
  for (std::size_t i = 0; i < 4; ++i) t[i] = f.derivative(static_cast<int>(i));
  return t;
}

Poly div(const Tuple4& x) {
  Poly s(4);
  for (std::size_t i = 0; i < 4; ++i) s += x[i].derivative(static_cast<int>(i));
  return s;
}

CrossTuple6 cross_by(const SlotProduct& p) {
  CrossTuple6 c;
  c[0] = p(0, 3) - p(3, 0);
  c[1] = p(0, 1) - p(1, 0);
  c[2] = p(2, 1) - p(1, 2);
  c[3] = p(2, 3) - p(3, 2);
  c[4] = p(2, 0) - p(0, 2);
  c[5] = p(1, 3) - p(3, 1);
  return c;
}

Tuple4 barcross_by(const SlotProduct& p) {
  Tuple4 r;
  r[0] = -p(3, 2) + p(1, 3) - p(2, 5);
  r[1] = p(2, 0) - p(0, 3) + p(3, 4);
  r[2] = -p(1, 0) + p(3, 1) + p(0, 5);
  r[3] = -p(2, 1) + p(0, 2) - p(1, 4);
  return r;
}

CrossTuple6 cross(const Tuple4& x, const Tuple4& y) {
  return cross_by([&](std::size_t k, std::size_t j) { return x[k] * y[j]; });
}

Tuple4 barcross(const Tuple4& x, const CrossTuple6& y) {
  return barcross_by([&](std::size_t k, std::size_t j) { return x[k] * y[j]; });
}

CrossTuple6 nabla_cross(const Tuple4& x) {
  return cross_by([&](std::size_t k, std::size_t j) { return x[j].derivative(static_cast<int>(k)); });
}

Tuple4 nabla_barcross(const CrossTuple6& y) {
  return barcross_by([&](std::size_t k, std::size_t j) { return y[j].derivative(static_cast<int>(k)); });
}

CrossTuple6 cross(const DerivationTuple& ops, const Tuple4& y) {
  return cross_by([&](std::size_t k, std::size_t j) { return ops.apply(k, y[j]); });
}

Tuple4 barcross(const DerivationTuple& ops, const CrossTuple6& y) {
  return barcross_by([&](std::size_t k, std::size_t j) { return ops.apply(k, y[j]); });
}

// ---------------------------------------------------------------- constants

CrossTuple6 hodge2(const CrossTuple6& y) { return apply_matrix<CrossTuple6>(kStar, y); }

// phi = K o I^{-1} o star o K^{-1} has the same matrix as the Hodge star on 2-forms.
CrossTuple6 apply_phi(const CrossTuple6& y) { return apply_matrix<CrossTuple6>(kStar, y); }

Tuple4 apply_D(const Tuple4& x) { return apply_matrix<Tuple4>(kD, x); }

CrossTuple6 apply_K(const Tuple6& w) { return apply_matrix<CrossTuple6>(kK, w); }

Tuple6 apply_K_inv(const CrossTuple6& c) { return apply_matrix<Tuple6>(kKInv, c); }

// ---------------------------------------------------------------- bundles

std::array<CrossTuple6, 4> partials(const CrossTuple6& y) {
  std::array<CrossTuple6, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t s = 0; s < 6; ++s) out[i][s] = y[s].derivative(static_cast<int>(i));
  }
  return out;
}

Tuple4 boxtimes(const std::array<CrossTuple6, 4>& jets, const CrossTuple6& w) {
  Tuple4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = dot(jets[i], w);
  return out;
}

CrossTuple6 directional(const Tuple4& y, const CrossTuple6& c) {
  CrossTuple6 out;
  for (std::size_t s = 0; s < 6; ++s) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (!y[i].is_zero()) out[s] += y[i] * c[s].derivative(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace blf::calc4
