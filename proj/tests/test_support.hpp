#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "conlab/laurent.hpp"

namespace conlab {

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

}  // namespace conlab

namespace conlab::test {

inline LaurentPolynomial P(int lowest, std::vector<long> coeffs, Variable v = Variable::t) {
  return LaurentPolynomial::from_integers(lowest, coeffs, v);
}

inline Rational Q(long p, long q = 1) { return make_rational(p, q); }

inline LaurentPolynomial random_poly(std::mt19937& rng, int max_span = 4, int low = -3, int high = 3,
                                     Variable v = Variable::t) {
  std::uniform_int_distribution<int> start(low, high);
  std::uniform_int_distribution<int> span(0, max_span);
  std::uniform_int_distribution<long> coeff(-5, 5);
  const int s = span(rng);
  std::vector<long> c(static_cast<std::size_t>(s + 1));
  for (auto& x : c) x = coeff(rng);
  return P(start(rng), c, v);
}

}  // namespace conlab::test
