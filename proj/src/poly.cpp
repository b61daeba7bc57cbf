#include "blf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "blf/errors.hpp"

namespace blf {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(std::span<const int> exps) {
  std::uint64_t bits = 0;
  int deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > static_cast<int>(kMask)) {
      throw DimensionError("exponent out of range");
    }
    bits |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<int>(i));
    deg += exps[i];
  }
  return Monomial(bits | (static_cast<std::uint64_t>(deg) << kDegreeShift));
}

Monomial Monomial::variable(int i) {
  std::array<int, kMaxVars> e{};
  e.at(static_cast<std::size_t>(i)) = 1;
  return from_exponents(e);
}

std::array<int, kMaxVars> Monomial::exponents() const {
  std::array<int, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) e[static_cast<std::size_t>(i)] = exponent(i);
  return e;
}

// ---------------------------------------------------------------- Poly

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; }

// Sorts descending and merges equal monomials, dropping zeros.
void normalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Monomial m = terms[i].first;
    Rational c = std::move(terms[i].second);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == m; ++j) c += terms[j].second;
    if (c != 0) {
      terms[out].first = m;
      terms[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw DimensionError("unsupported variable count");
}

Poly Poly::constant(int nvars, const Rational& c) { return term(nvars, Monomial{}, c); }

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw DimensionError("variable index out of range");
  return term(nvars, Monomial::variable(i));
}

Poly Poly::term(int nvars, Monomial m, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().first.degree() == terms_.back().first.degree();
}

Rational Poly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

void Poly::check_same(const Poly& other) const {
  if (nvars_ != other.nvars_) throw DimensionError("polynomials have different variable counts");
}

void Poly::add_scaled(const Poly& other, int sign) {
  check_same(other);
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      merged.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& other) {
  add_scaled(other, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  add_scaled(other, -1);
  return *this;
}

namespace {

// Coefficients scaled to a common denominator: c_i = num[i] / den.
struct IntegerImage {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
  std::uint64_t max_abs = 0;
};

bool integer_image(std::span<const Poly::Term> terms, IntegerImage& out) {
  out.den = 1;
  for (const auto& t : terms) {
    if (!t.second.is_small()) return false;
    const std::int64_t d = t.second.small_den();
    if (d == 1) continue;
    const std::int64_t g = std::gcd(out.den, d);
    if (__builtin_mul_overflow(out.den / g, d, &out.den)) return false;
  }
  out.num.clear();
  out.max_abs = 0;
  for (const auto& t : terms) {
    std::int64_t v;
    if (__builtin_mul_overflow(t.second.small_num(), out.den / t.second.small_den(), &v)) return false;
    if (v == std::numeric_limits<std::int64_t>::min()) return false;
    out.num.push_back(v);
    out.max_abs = std::max(out.max_abs, static_cast<std::uint64_t>(v < 0 ? -v : v));
  }
  return true;
}

struct DenseBuffer {
  std::vector<std::int64_t> acc;
  std::vector<std::uint32_t> touched;
};

thread_local DenseBuffer dense_buffer;

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;
constexpr std::size_t kDenseMinProducts = 64;

// Exact product through machine integers; false when a bound check fails.
bool dense_product(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, int nvars,
                   std::vector<Poly::Term>& out) {
  IntegerImage ia;
  IntegerImage ib;
  if (!integer_image(a, ia) || !integer_image(b, ib)) return false;
  const unsigned __int128 bound = static_cast<unsigned __int128>(ia.max_abs) * ib.max_abs * std::min(a.size(), b.size());
  if (bound >= (static_cast<unsigned __int128>(1) << 62)) return false;

  const int base = a.front().first.degree() + b.front().first.degree() + 1;
  std::array<std::size_t, kMaxVars> stride{};
  std::size_t size = 1;
  for (int i = nvars - 1; i >= 0; --i) {
    stride[static_cast<std::size_t>(i)] = size;
    size *= static_cast<std::size_t>(base);
    if (size > kDenseLimit) return false;
  }
  auto index_of = [&](Monomial m) {
    std::size_t idx = 0;
    for (int i = 0; i < nvars; ++i) idx += static_cast<std::size_t>(m.exponent(i)) * stride[static_cast<std::size_t>(i)];
    return idx;
  };
  std::vector<std::size_t> idx_b(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) idx_b[j] = index_of(b[j].first);

  auto& buf = dense_buffer;
  if (buf.acc.size() < size) buf.acc.assign(size, 0);
  buf.touched.clear();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t ia_idx = index_of(a[i].first);
    const std::int64_t ca = ia.num[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t k = ia_idx + idx_b[j];
      if (buf.acc[k] == 0) buf.touched.push_back(static_cast<std::uint32_t>(k));
      buf.acc[k] += ca * ib.num[j];
    }
  }
  std::int64_t den;
  if (__builtin_mul_overflow(ia.den, ib.den, &den)) return false;
  std::array<int, kMaxVars> e{};
  out.clear();
  std::sort(buf.touched.begin(), buf.touched.end());
  buf.touched.erase(std::unique(buf.touched.begin(), buf.touched.end()), buf.touched.end());
  for (std::uint32_t k : buf.touched) {
    const std::int64_t c = buf.acc[k];
    buf.acc[k] = 0;
    if (c == 0) continue;
    for (int i = 0; i < nvars; ++i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>((k / stride[static_cast<std::size_t>(i)]) % static_cast<std::size_t>(base));
    }
    Rational q = den == 1 ? Rational(c) : Rational(c, den);
    out.emplace_back(Monomial::from_exponents(std::span<const int>(e.data(), static_cast<std::size_t>(nvars))), std::move(q));
  }
  std::sort(out.begin(), out.end(), term_greater);
  return true;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out(a.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() * b.terms_.size() >= kDenseMinProducts && dense_product(a.terms_, b.terms_, a.nvars_, out.terms_)) {
    return out;
  }
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.terms_.emplace_back(ma * mb, ca * cb);
  }
  if (a.terms_.size() > 1 && b.terms_.size() > 1) {
    normalize(out.terms_);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw DimensionError("derivative index out of range");
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(i);
    if (e > 0) out.terms_.emplace_back(m.divided_by_variable(i), c * e);
  }
  // Differentiation in one variable preserves the relative order of surviving terms.
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Poly Poly::reflect(std::span<const bool> flip) const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) {
    int parity = 0;
    for (std::size_t i = 0; i < flip.size() && i < static_cast<std::size_t>(nvars_); ++i) {
      if (flip[i]) parity += m.exponent(static_cast<int>(i));
    }
    if (parity % 2 != 0) c = -c;
  }
  return out;
}

Poly Poly::remap(int new_nvars, std::span<const int> target) const {
  if (static_cast<int>(target.size()) != nvars_) throw DimensionError("remap table size");
  Poly out(new_nvars);
  for (const auto& [m, c] : terms_) {
    std::array<int, kMaxVars> e{};
    for (int i = 0; i < nvars_; ++i) {
      const int t = target[static_cast<std::size_t>(i)];
      if (t < 0 || t >= new_nvars) throw DimensionError("remap target out of range");
      e[static_cast<std::size_t>(t)] += m.exponent(i);
    }
    out.terms_.emplace_back(Monomial::from_exponents(std::span<const int>(e.data(), new_nvars)), c);
  }
  normalize(out.terms_);
  return out;
}

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op, const Rational& scalar) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::scale: return a * scalar;
  }
  throw UsageError("unknown arithmetic op");
}

Poly homogeneous_component(const Poly& p, int d) {
  Poly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == d) out += Poly::term(p.nvars(), m, c);
  }
  return out;
}

std::vector<Monomial> monomial_basis(int nvars, int d) {
  if (nvars < 1 || nvars > kMaxVars) throw DimensionError("unsupported variable count");
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::array<int, kMaxVars> e{};
  // Depth-first with the first variable taking the largest exponent first.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = remaining;
      out.push_back(Monomial::from_exponents(std::span<const int>(e.data(), nvars)));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, remaining - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    bool star = false;
    for (int i = 0; i < p.nvars(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      os << (star ? " " : " * ") << names[static_cast<std::size_t>(i)] << '^' << e;
      star = true;
    }
  }
  return os.str();
}

std::string to_string(const Poly& p) {
  const auto names = default_variable_names(p.nvars());
  return to_string(p, names);
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  Poly parse() {
    const int nvars = static_cast<int>(names_.size());
    Poly result(nvars);
    skip_space();
    if (at_end()) throw ParseError("empty polynomial");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    result += parse_term(nvars) * Rational(sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_space();
      int s = op == '-' ? -1 : 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') s = -s;
        ++pos_;
      }
      result += parse_term(nvars) * Rational(s);
    }
    return result;
  }

private:
  Poly parse_term(int nvars) {
    skip_space();
    Rational coeff = 1;
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) != 0 || peek() == '/')) ++pos_;
      coeff = parse_rational(text_.substr(start, pos_ - start));
      have_factor = true;
    }
    std::array<int, kMaxVars> e{};
    while (true) {
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
      const int var = match_variable();
      if (var < 0) break;
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (start == pos_) fail("expected exponent");
        power = std::stoi(std::string(text_.substr(start, pos_ - start)));
      }
      e[static_cast<std::size_t>(var)] += power;
      have_factor = true;
    }
    if (!have_factor) fail("expected coefficient or variable");
    return Poly::term(nvars, Monomial::from_exponents(std::span<const int>(e.data(), nvars)), coeff);
  }

  int match_variable() {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best >= 0) {
      const std::size_t end = pos_ + best_len;
      if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) != 0 || text_[end] == '_')) {
        fail("unknown variable");
      }
      pos_ = end;
    }
    return best;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> names) {
  if (names.empty() || names.size() > kMaxVars) throw DimensionError("unsupported variable count");
  return PolyParser(text, names).parse();
}

Poly parse_poly(std::string_view text, int nvars) {
  const auto names = default_variable_names(nvars);
  return parse_poly(text, names);
}

}  // namespace blf
