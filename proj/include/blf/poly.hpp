#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blf/rational.hpp"

namespace blf {

inline constexpr int kMaxVars = 4;

/// Exponent vector packed into one word as (total degree, e0, e1, e2, e3),
/// 12 bits per field. Integer order on the packed word is graded-lex with
/// x_0 > x_1 > x_2 > x_3, and multiplication is word addition.
class Monomial {
public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int i);

  int exponent(int i) const {
    return static_cast<int>((bits_ >> shift(i)) & kMask);
  }
  int degree() const { return static_cast<int>(bits_ >> kDegreeShift); }
  std::array<int, kMaxVars> exponents() const;

  Monomial operator*(Monomial other) const { return Monomial(bits_ + other.bits_); }
  /// Requires exponent(i) > 0.
  Monomial divided_by_variable(int i) const {
    return Monomial(bits_ - (std::uint64_t{1} << shift(i)) - (std::uint64_t{1} << kDegreeShift));
  }
  std::uint64_t key() const { return bits_; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  static constexpr int kBits = 12;
  static constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;
  static constexpr int kDegreeShift = kBits * kMaxVars;
  static constexpr int shift(int i) { return kBits * (kMaxVars - 1 - i); }

  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Sparse polynomial in nvars variables with exact rational coefficients.
/// Terms are kept sorted by descending graded-lex order with no zero coefficients.
class Poly {
public:
  using Term = std::pair<Monomial, Rational>;

  explicit Poly(int nvars = kMaxVars);

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);
  static Poly term(int nvars, Monomial m, const Rational& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree among stored terms; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  bool is_homogeneous() const;
  bool is_constant() const { return degree() <= 0; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(Monomial m) const;
  /// Value of the constant term.
  Rational constant_term() const { return coefficient(Monomial{}); }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly derivative(int i) const;
  Poly pow(unsigned e) const;
  /// Substitutes x_i -> -x_i for every i with flip[i] set.
  Poly reflect(std::span<const bool> flip) const;
  /// Re-embeds into new_nvars variables: variable i of *this becomes variable target[i].
  Poly remap(int new_nvars, std::span<const int> target) const;

private:
  void add_scaled(const Poly& other, int sign);
  void check_same(const Poly& other) const;

  int nvars_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul, scale };

/// Binary arithmetic front door; `scalar` is used only for ArithOp::scale.
Poly poly_arith(const Poly& a, const Poly& b, ArithOp op, const Rational& scalar = 1);

/// The degree-d part of p (zero polynomial when absent).
Poly homogeneous_component(const Poly& p, int d);

/// All exponent vectors of total degree d in nvars variables, graded-lex descending.
/// Length is C(d + nvars - 1, nvars - 1).
std::vector<Monomial> monomial_basis(int nvars, int d);

/// Default variable names x1..xn.
std::vector<std::string> default_variable_names(int nvars);

/// Serializes as a " + "-joined list of `num/den * x1^a1 x2^a2 ...` terms
/// (variables with zero exponent omitted), or "0".
std::string to_string(const Poly& p, std::span<const std::string> names);
std::string to_string(const Poly& p);

/// Inverse of to_string. Also accepts integer coefficients, '-' between
/// terms, bare variables without `^1`, and '*' between factors.
Poly parse_poly(std::string_view text, std::span<const std::string> names);
Poly parse_poly(std::string_view text, int nvars);

}  // namespace blf
