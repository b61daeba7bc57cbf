#pragma once

#include <span>
#include <vector>

#include "blf/poly.hpp"

namespace blf {

/// Index sets {i_1 < ... < i_k} of {0, ..., nvars-1} as bitmasks, in lexicographic
/// order. For nvars = 4, k = 2 this is (01, 02, 03, 12, 13, 23), the ordering of
/// the coefficient tuple (f12, f13, f14, f23, f24, f34) in one-based names.
/// Empty for k < 0 or k > nvars.
std::span<const unsigned> basis_subsets(int nvars, int k);

/// Position of `mask` within basis_subsets(nvars, popcount(mask)).
std::size_t subset_index(int nvars, unsigned mask);

/// Sign of the permutation that sorts the concatenation (I, J) of disjoint index sets.
int merge_sign(unsigned left, unsigned right);

/// A k-vector field with polynomial coefficients, stored as the ordered tuple of
/// its coefficients on basis_subsets(nvars, k). Degrees k outside [0, nvars] are
/// allowed and carry no slots: they are the zero spaces produced by overflowing
/// wedges (k > nvars) or brackets of two functions (k = -1).
class MVec {
public:
  MVec(int nvars, int k);
  MVec(int nvars, int k, std::vector<Poly> coeffs);

  static MVec function(const Poly& f);
  /// coeff * d_{i1} ^ ... ^ d_{ik} where mask = {i1, ..., ik}.
  static MVec basis(int nvars, unsigned mask, const Poly& coeff);
  static MVec basis(int nvars, unsigned mask);

  int nvars() const { return nvars_; }
  int k() const { return k_; }
  std::size_t slots() const { return coeffs_.size(); }
  /// True when the degree exceeds the dimension; such a value is always zero.
  bool overflow() const { return k_ > nvars_; }
  bool is_zero() const;
  /// Maximum coefficient degree (-1 when zero).
  int degree() const;

  const Poly& operator[](std::size_t slot) const { return coeffs_[slot]; }
  Poly& operator[](std::size_t slot) { return coeffs_[slot]; }
  const Poly& at_mask(unsigned mask) const { return coeffs_[subset_index(nvars_, mask)]; }
  Poly& at_mask(unsigned mask) { return coeffs_[subset_index(nvars_, mask)]; }
  std::span<const Poly> coeffs() const { return coeffs_; }

  MVec& operator+=(const MVec& other);
  MVec& operator-=(const MVec& other);
  MVec& operator*=(const Rational& c);
  MVec& operator*=(const Poly& f);
  MVec operator-() const;

  friend MVec operator+(MVec a, const MVec& b) { return a += b; }
  friend MVec operator-(MVec a, const MVec& b) { return a -= b; }
  friend MVec operator*(MVec a, const Rational& c) { return a *= c; }
  friend MVec operator*(const Rational& c, MVec a) { return a *= c; }
  friend MVec operator*(const Poly& f, MVec a) { return a *= f; }
  friend bool operator==(const MVec& a, const MVec& b) = default;

  /// Coefficientwise partial derivative.
  MVec derivative(int i) const;
  /// Coefficientwise homogeneous component.
  MVec homogeneous_part(int d) const;

private:
  void check_same(const MVec& other) const;

  int nvars_;
  int k_;
  std::vector<Poly> coeffs_;
};

/// Exterior product in the flattened encoding.
MVec wedge(const MVec& x, const MVec& y);

/// Schouten-Nijenhuis bracket, from the coordinate expression
///   [P, Q] = sum_i (P d/dxi_i)(d_i Q) - (d_i P)(d/dxi_i Q)
/// with right and left odd derivatives in the fibre coordinates xi_i = d_i.
/// With this choice [X, f] = X(f) and [pi, f] = sum_j {x_j, f} d_j.
MVec schouten(const MVec& p, const MVec& q);

/// d_pi(X) = [pi, X]. Requires pi.k() == 2.
MVec lichnerowicz_d(const MVec& pi, const MVec& x);

/// Constant-coefficient top form scale * dx_0 ^ ... ^ dx_{n-1}.
class VolumeForm {
public:
  explicit VolumeForm(int nvars, Rational scale = 1);
  int nvars() const { return nvars_; }
  const Rational& scale() const { return scale_; }

private:
  int nvars_;
  Rational scale_;
};

/// Differential form of degree `coefficients.k()`; slot I holds the coefficient of dx_I.
struct Form {
  MVec coefficients;
  friend bool operator==(const Form&, const Form&) = default;
};

/// Contraction *X = i_X omega, with i_{X ^ Y} = i_Y i_X.
Form star_contract(const MVec& x, const VolumeForm& omega);
/// Inverse of star_contract.
MVec star_inverse(const Form& form, const VolumeForm& omega);

/// Modular vector field of a bivector with respect to a constant volume form:
/// Y_j = sum_i d_i(pi_ij).
MVec modular_vf(const MVec& pi, const VolumeForm& omega);

/// E = sum_i x_i d_i.
MVec euler_field(int nvars);

}  // namespace blf
