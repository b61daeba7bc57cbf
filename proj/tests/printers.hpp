#pragma once

#include <ostream>

#include "blf/calc4.hpp"
#include "blf/cohomology.hpp"

// Readable failure messages for the library types.
namespace blf {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << to_string(p); }

inline void PrintTo(const MVec& x, std::ostream* os) {
  *os << "[k=" << x.k() << "]";
  for (std::size_t s = 0; s < x.slots(); ++s) *os << (s == 0 ? " (" : ", ") << to_string(x[s]);
  *os << (x.slots() ? ")" : " ()");
}

inline void PrintTo(const Rational& q, std::ostream* os) { *os << to_string(q); }

inline void PrintTo(const GradedMatrix& m, std::ostream* os) {
  *os << m.rows << "x" << m.cols << " matrix for k=" << m.k << ", degree " << m.in_degree;
}

namespace calc4 {
template <std::size_t N, class Frame>
void PrintTo(const PolyTuple<N, Frame>& t, std::ostream* os) {
  for (std::size_t i = 0; i < N; ++i) *os << (i == 0 ? "(" : ", ") << to_string(t[i]);
  *os << ")";
}
}  // namespace calc4

}  // namespace blf
