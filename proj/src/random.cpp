#include "blf/random.hpp"

namespace blf {

Rational RandomSource::coefficient() {
  std::uniform_int_distribution<int> dist(-9, 9);
  return Rational(dist(engine_));
}

Poly RandomSource::homogeneous(int nvars, int degree) {
  Poly p(nvars);
  for (Monomial m : monomial_basis(nvars, degree)) p += Poly::term(nvars, m, coefficient());
  return p;
}

Poly RandomSource::poly(int nvars, int max_degree) {
  Poly p(nvars);
  for (int d = 0; d <= max_degree; ++d) p += homogeneous(nvars, d);
  return p;
}

MVec RandomSource::mvec(int nvars, int k, int max_degree) {
  MVec x(nvars, k);
  for (std::size_t s = 0; s < x.slots(); ++s) x[s] = poly(nvars, max_degree);
  return x;
}

MVec RandomSource::homogeneous_mvec(int nvars, int k, int degree) {
  MVec x(nvars, k);
  for (std::size_t s = 0; s < x.slots(); ++s) x[s] = homogeneous(nvars, degree);
  return x;
}

}  // namespace blf
