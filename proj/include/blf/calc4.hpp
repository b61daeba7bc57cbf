#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "blf/mvfield.hpp"
#include "blf/poly.hpp"

namespace blf::calc4 {

// Frames for coefficient tuples on R^4.
//  - VectorFrame: (f1, f2, f3, f4), used both for vector fields and, through
//    (f123, f124, f134, f234), for 3-vector fields.
//  - WedgeFrame: (f12, f13, f14, f23, f24, f34), the lexicographic bivector slots.
//  - CrossFrame: the slot order produced by X x Y, i.e. the wedge coefficients
//    (w14, w12, -w23, w34, -w13, w24). The star/phi matrices, the second slot of
//    the bar-cross product and K's image all live in this frame.
struct VectorFrame {};
struct WedgeFrame {};
struct CrossFrame {};

template <std::size_t N, class Frame>
class PolyTuple {
public:
  static constexpr std::size_t size = N;

  PolyTuple() { v_.fill(Poly(4)); }
  explicit PolyTuple(std::array<Poly, N> v) : v_(std::move(v)) {}

  static PolyTuple unit(std::size_t i) {
    PolyTuple t;
    t[i] = Poly::constant(4, 1);
    return t;
  }

  Poly& operator[](std::size_t i) { return v_[i]; }
  const Poly& operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const {
    for (const auto& p : v_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  PolyTuple& operator+=(const PolyTuple& o) {
    for (std::size_t i = 0; i < N; ++i) v_[i] += o.v_[i];
    return *this;
  }
  PolyTuple& operator-=(const PolyTuple& o) {
    for (std::size_t i = 0; i < N; ++i) v_[i] -= o.v_[i];
    return *this;
  }
  PolyTuple& operator*=(const Rational& c) {
    for (auto& p : v_) p *= c;
    return *this;
  }
  PolyTuple& operator*=(const Poly& f) {
    for (auto& p : v_) p = f * p;
    return *this;
  }
  PolyTuple operator-() const {
    PolyTuple t = *this;
    for (auto& p : t.v_) p = -p;
    return t;
  }

  friend PolyTuple operator+(PolyTuple a, const PolyTuple& b) { return a += b; }
  friend PolyTuple operator-(PolyTuple a, const PolyTuple& b) { return a -= b; }
  friend PolyTuple operator*(const Rational& c, PolyTuple a) { return a *= c; }
  friend PolyTuple operator*(const Poly& f, PolyTuple a) { return a *= f; }
  friend bool operator==(const PolyTuple& a, const PolyTuple& b) { return a.v_ == b.v_; }

  friend Poly dot(const PolyTuple& a, const PolyTuple& b) {
    Poly s(4);
    for (std::size_t i = 0; i < N; ++i) s += a.v_[i] * b.v_[i];
    return s;
  }

private:
  std::array<Poly, N> v_;
};

using Tuple4 = PolyTuple<4, VectorFrame>;
using Tuple6 = PolyTuple<6, WedgeFrame>;
using CrossTuple6 = PolyTuple<6, CrossFrame>;

/// A 4-tuple of first-order derivations; entry k acts as g -> sum_j fields[k][j] d_j g.
struct DerivationTuple {
  std::array<Tuple4, 4> fields;
  Poly apply(std::size_t k, const Poly& g) const;
};

/// Products "f_k g_j" for the generic cross and bar-cross formulas (zero-based k, j).
using SlotProduct = std::function<Poly(std::size_t k, std::size_t j)>;

// ---- encodings

Tuple4 to_tuple4(const MVec& x);  // k = 1 or k = 3
Tuple6 to_tuple6(const MVec& x);  // k = 2
MVec vector_field(const Tuple4& t);
MVec trivector_field(const Tuple4& t);
MVec bivector_field(const Tuple6& t);

/// Bridge between the x output order and the wedge slots:
/// (c1..c6) = (w14, w12, -w23, w34, -w13, w24).
Tuple6 to_wedge_order(const CrossTuple6& c);
CrossTuple6 to_cross_order(const Tuple6& w);

// ---- first-order calculus

Tuple4 grad(const Poly& f);
Poly div(const Tuple4& x);

CrossTuple6 cross(const Tuple4& x, const Tuple4& y);
CrossTuple6 cross_by(const SlotProduct& prod);
Tuple4 barcross(const Tuple4& x, const CrossTuple6& y);
Tuple4 barcross_by(const SlotProduct& prod);

/// The x and bar-x formulas with f_k g_j read as d_k g_j.
CrossTuple6 nabla_cross(const Tuple4& x);
Tuple4 nabla_barcross(const CrossTuple6& y);

/// The x and bar-x formulas with f_k g_j read as ops.apply(k, g_j).
CrossTuple6 cross(const DerivationTuple& ops, const Tuple4& y);
Tuple4 barcross(const DerivationTuple& ops, const CrossTuple6& y);

// ---- constant operators

CrossTuple6 hodge2(const CrossTuple6& y);
CrossTuple6 apply_phi(const CrossTuple6& y);
Tuple4 apply_D(const Tuple4& x);
CrossTuple6 apply_K(const Tuple6& w);
Tuple6 apply_K_inv(const CrossTuple6& c);

// ---- derivative bundles

/// (d_1 y, ..., d_4 y): entrywise partials of a 6-tuple.
std::array<CrossTuple6, 4> partials(const CrossTuple6& y);

/// Entry i is jets[i] . w.
Tuple4 boxtimes(const std::array<CrossTuple6, 4>& jets, const CrossTuple6& w);

/// Applies the vector field y as a derivation to every entry of c.
CrossTuple6 directional(const Tuple4& y, const CrossTuple6& c);

}  // namespace blf::calc4
