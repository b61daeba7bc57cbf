#pragma once

#include <cstdint>
#include <random>

#include "blf/mvfield.hpp"
#include "blf/poly.hpp"

namespace blf {

/// Seeded source of random polynomials and multivectors with integer
/// coefficients in [-9, 9].
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Every monomial of degree <= max_degree gets an independent coefficient.
  Poly poly(int nvars, int max_degree);
  /// Every monomial of exactly the given degree gets an independent coefficient.
  Poly homogeneous(int nvars, int degree);
  MVec mvec(int nvars, int k, int max_degree);
  MVec homogeneous_mvec(int nvars, int k, int degree);
  Rational coefficient();

private:
  std::mt19937_64 engine_;
};

}  // namespace blf
