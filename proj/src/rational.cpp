#include "blf/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "blf/errors.hpp"

namespace blf {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer to_integer(i128 v) {
  const u128 u = abs128(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
  Integer z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) z = -z;
  return z;
}

bool fits(const Integer& z) { return z.fits_slong_p() && z != std::numeric_limits<long>::min(); }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  set_canonical(n, d);
}

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  assign(q);
}

void Rational::assign(const mpq_class& q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(q);
  }
}

void Rational::set_canonical(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d != 1) {
    const u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
  }
  if (n <= kMax && n >= -kMax && d <= kMax) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    mpq_class q(to_integer(n), to_integer(d));
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Integer Rational::numerator() const { return big_ ? Integer(big_->get_num()) : Integer(static_cast<long>(num_)); }

Integer Rational::denominator() const { return big_ ? Integer(big_->get_den()) : Integer(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpq_set_si(q.get_mpq_t(), static_cast<long>(num_), static_cast<unsigned long>(den_));
  return q;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        num_ = r;
        return *this;
      }
      set_canonical(static_cast<i128>(num_) + o.num_, 1);
      return *this;
    }
    set_canonical(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_sub_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        num_ = r;
        return *this;
      }
      set_canonical(static_cast<i128>(num_) - o.num_, 1);
      return *this;
    }
    set_canonical(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        num_ = r;
        return *this;
      }
      set_canonical(static_cast<i128>(num_) * o.num_, 1);
      return *this;
    }
    set_canonical(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    set_canonical(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign(to_mpq() / o.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // a demoted value never equals one that does not fit
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << to_string(q); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  const Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(Integer(num), d);
}

std::string to_string(const Rational& q) {
  if (q.is_small()) return std::to_string(q.small_num()) + "/" + std::to_string(q.small_den());
  return q.numerator().get_str() + "/" + q.denominator().get_str();
}

}  // namespace blf
