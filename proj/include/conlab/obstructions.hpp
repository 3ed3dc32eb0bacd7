#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlab/laurent.hpp"
#include "conlab/turks_head.hpp"

namespace conlab {

struct ObstructionVerdict {
  std::string knot;
  LaurentPolynomial alexander;
  Integer determinant;  // |Delta(-1)|
  bool delta_is_square = false;
  bool det_is_square = false;
  std::optional<SquareRootWitness> witness;
};

// Squareness of a normalized Alexander polynomial up to units, together with
// the weaker necessary condition that |Delta(-1)| is a perfect square.
ObstructionVerdict fox_milnor_test(const LaurentPolynomial& alexander, std::string knot = {});

// Whether det(J_n) = lucas(2n) - 2 is a perfect square, for even n in the family.
bool det_square_test_even_turks(int n);

// |nabla(-2i)|.  nabla must take a real or purely imaginary value there,
// which holds for Conway polynomials of links.
Integer determinant_from_conway(const LaurentPolynomial& conway);

struct MothPolynomial {
  RationalFunction value;
};

// nabla_{L0} / (z nabla_K), reduced.
MothPolynomial moth_polynomial(const LaurentPolynomial& conway_k, const LaurentPolynomial& conway_l0);

// Conway polynomial of the p-butterfly link: nabla_{L0} + p z nabla_K.
LaurentPolynomial butterfly_conway(const LaurentPolynomial& conway_k, const LaurentPolynomial& conway_l0, long p);

struct EtaVerdict {
  bool fires = false;  // det_k does not divide det_lp
  Integer det_k;
  Integer det_lp;
  std::string conclusion;
};

// If det(K) does not divide det(L_b^p(K)), the reduced denominator of the
// moth polynomial is nonconstant and divides nabla_K.
EtaVerdict eta_denominator_obstruction(const LaurentPolynomial& conway_k, const Integer& det_k, const Integer& det_lp);

// Certificate that the moth polynomials of J_n, n in the family, are
// Z-linearly independent.  Distinct members must be coprime (the hypothesis
// is read as "m != n").
struct IndependenceCertificate {
  std::vector<int> family;
  bool pairwise_coprime = false;
  bool alexander_pairwise_coprime = false;
  bool conway_pairwise_coprime = false;
  bool det_int_ok = false;
  std::vector<DetIntReport> det_int_reports;
  std::vector<std::string> failures;
  bool conclusion = false;
};

IndependenceCertificate independence_certificate(const std::vector<int>& family);

struct ConnectedSumVerdict {
  bool is_square = false;
  std::vector<int> parity;  // |multiplicity| mod 2, in input order
};

// Squareness of prod Delta_i^{a_i} for pairwise coprime Delta_i.
ConnectedSumVerdict connected_sum_square_test(const std::vector<std::pair<LaurentPolynomial, long>>& summands);

}  // namespace conlab
