#pragma once

#include "conlab/laurent.hpp"
#include "conlab/symmetric_matrix.hpp"
#include "conlab/weighted_graph.hpp"

namespace conlab {

// Odd n >= 5 with n not divisible by 3.  The Goeritz graph below has
// k = (n - 1) / 2 vertices on each arm.
class TurksHeadIndex {
 public:
  explicit TurksHeadIndex(int n);

  int n() const { return n_; }
  int k() const { return (n_ - 1) / 2; }

 private:
  int n_;
};

// Goeritz graph of the checkerboard surface of J_n: vertices a, b, c,
// v1..vk, w1..wk (in that order).  All weights are 1 except a-vk = a-wk = 2
// and a-c = -1.
WeightedGraph build_gamma(TurksHeadIndex index);
// b and c identified (the merged vertex is "b~c"); the a-(b~c) weight cancels.
WeightedGraph build_gamma_bar(TurksHeadIndex index);
// build_gamma plus an edge b-c of weight x.
WeightedGraph build_gamma_x(TurksHeadIndex index, const Rational& x);

// det(J_n) = T(gamma); odd and positive.
Integer det_turks_head(TurksHeadIndex index);
// T(gamma_bar): the determinant of the butterfly link cut from the surface.
Integer det_butterfly(TurksHeadIndex index);

struct DetIntReport {
  int n = 0;
  Integer det_j;
  Integer det_butterfly;
  Rational t_quarter;  // T(gamma(-1/4))
  Rational t_half;     // T(gamma(-1/2))
  bool ratio_is_integer = false;
  bool inequality_holds = false;  // 2 det_j < det_butterfly < 4 det_j
  bool butterfly_is_even = false;
  bool lucas_check = false;  // det_j == lucas(2n) - 2

  // L(gamma(-1/4); a) with the row and column of c scaled by 3.
  SymmetricMatrix scaled_quarter;
  Dominance scaled_quarter_dominance = Dominance::not_dominant;
  bool scaled_quarter_positive_diagonal = false;
  bool scaled_quarter_positive_definite = false;

  Inertia half_inertia;  // of L(gamma(-1/2); a); expected (n, 1, 0)
  // L(gamma(-1/2); a) restricted to (c, b, vk, wk).
  SymmetricMatrix restriction;
  Rational restriction_determinant;
};

// The determinant-ratio argument for J_n, recomputed end to end.  Throws
// DomainError naming the first invariant that fails.
DetIntReport lemma_det_int_report(TurksHeadIndex index);

// The explicit 4x4 block (rows c, b, vk, wk) that L(gamma(-1/2); a) must restrict to.
SymmetricMatrix expected_restriction_block();

// -m^2 t^-1 + (2m^2 + 1) - m^2 t, the Alexander polynomial of Cha's knot K_m.
LaurentPolynomial cha_alexander(int m);

}  // namespace conlab
