#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace blf {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// larger values live in a GMP rational. Results are demoted back to the
/// inline form whenever they fit, so equality is representation-independent.
class Rational {
public:
  Rational() noexcept = default;

  template <std::signed_integral T>
  Rational(T n) noexcept : num_(static_cast<std::int64_t>(n)) {  // NOLINT(google-explicit-constructor)
    if constexpr (sizeof(T) >= sizeof(std::int64_t)) {
      if (n == std::numeric_limits<std::int64_t>::min()) assign(mpq_class(Integer(static_cast<long>(n))));
    }
  }
  template <std::unsigned_integral T>
  Rational(T n) {  // NOLINT(google-explicit-constructor)
    if (n <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      num_ = static_cast<std::int64_t>(n);
    } else {
      Integer z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &n);
      assign(mpq_class(z));
    }
  }
  /// n / d; throws std::domain_error when d == 0.
  Rational(std::int64_t n, std::int64_t d);
  Rational(const Integer& n, const Integer& d);
  explicit Rational(const Integer& n) : Rational(n, Integer(1)) {}
  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_small() const { return !big_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const;
  /// Inline numerator and denominator; only meaningful when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  Integer numerator() const;
  Integer denominator() const;
  mpq_class to_mpq() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
  void assign(const mpq_class& q);
  void set_canonical(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Parses "n", "-n" or "n/d" (d != 0). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "3/1", "-1/4".
std::string to_string(const Rational& q);

}  // namespace blf
