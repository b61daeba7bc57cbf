#include "blf/linalg.hpp"

#include <algorithm>
#include <limits>

namespace blf {

namespace {

void make_primitive(SparseVector<Integer>& v) {
  Integer g = 0;
  for (const auto& [i, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

const Integer* find(const SparseVector<Integer>& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, std::uint32_t i) { return e.first < i; });
  return it != v.end() && it->first == index ? &it->second : nullptr;
}

// a * v - b * w
SparseVector<Integer> combine(const Integer& a, const SparseVector<Integer>& v, const Integer& b,
                              const SparseVector<Integer>& w) {
  SparseVector<Integer> out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Integer t;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -(b * w[j].second));
      ++j;
    } else {
      t = a * v[i].second - b * w[j].second;
      if (t != 0) out.emplace_back(v[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVector<Integer> primitive(const SparseVector<Rational>& v) {
  Integer den = 1;
  for (const auto& [i, x] : v) {
    const Integer d = x.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  SparseVector<Integer> out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    if (x == 0) continue;
    Integer n = x.numerator() * (den / x.denominator());
    out.emplace_back(i, std::move(n));
  }
  make_primitive(out);
  return out;
}

SparseVector<Integer> EchelonBasis::reduce(SparseVector<Integer> v) const {
  while (!v.empty()) {
    // Earliest basis row whose pivot lies in the support of v; later rows
    // vanish on earlier pivots, so eliminating in row order terminates.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& [i, x] : v) {
      auto it = pivot_row_.find(i);
      if (it != pivot_row_.end()) best = std::min(best, it->second);
    }
    if (best == std::numeric_limits<std::size_t>::max()) break;
    const auto& row = rows_[best];
    const std::uint32_t p = pivots_[best];
    const Integer& rp = *find(row, p);
    const Integer vp = *find(v, p);
    Integer g;
    mpz_gcd(g.get_mpz_t(), rp.get_mpz_t(), vp.get_mpz_t());
    v = combine(rp / g, v, vp / g, row);
    make_primitive(v);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector<Rational>& v) {
  SparseVector<Integer> r = reduce(primitive(v));
  if (r.empty()) return false;
  // pivot on the smallest entry to keep later multipliers small
  auto piv = std::min_element(r.begin(), r.end(), [](const auto& a, const auto& b) {
    return mpz_cmpabs(a.second.get_mpz_t(), b.second.get_mpz_t()) < 0;
  });
  pivots_.push_back(piv->first);
  pivot_row_.emplace(piv->first, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

bool EchelonBasis::contains(const SparseVector<Rational>& v) const { return reduce(primitive(v)).empty(); }

std::size_t exact_rank(const std::vector<SparseVector<Rational>>& vectors) {
  std::vector<const SparseVector<Rational>*> order;
  order.reserve(vectors.size());
  for (const auto& v : vectors) order.push_back(&v);
  // sparse vectors first: they make cheap pivots
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->size() < b->size(); });
  EchelonBasis basis;
  for (const auto* v : order) basis.insert(*v);
  return basis.rank();
}

}  // namespace blf
