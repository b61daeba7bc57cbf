#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "blf/rational.hpp"

namespace blf {

/// Sparse vector: (index, value) pairs with strictly increasing indices and nonzero values.
template <class T>
using SparseVector = std::vector<std::pair<std::uint32_t, T>>;

/// Incremental row-echelon basis over the rationals. Vectors are kept as
/// primitive integer vectors and reduced fraction-free, so no rational
/// arithmetic happens inside the elimination loop.
class EchelonBasis {
public:
  /// Reduces v against the basis and keeps it when it is independent.
  /// Returns true when the rank grew.
  bool insert(const SparseVector<Rational>& v);
  /// True when v lies in the span of the basis (the basis is not modified).
  bool contains(const SparseVector<Rational>& v) const;
  std::size_t rank() const { return rows_.size(); }

private:
  SparseVector<Integer> reduce(SparseVector<Integer> v) const;

  std::vector<SparseVector<Integer>> rows_;
  std::vector<std::uint32_t> pivots_;
  std::map<std::uint32_t, std::size_t> pivot_row_;
};

/// Exact rank of the span of the given vectors.
std::size_t exact_rank(const std::vector<SparseVector<Rational>>& vectors);

/// Scales v to a primitive integer vector (coprime entries, same direction).
SparseVector<Integer> primitive(const SparseVector<Rational>& v);

}  // namespace blf
