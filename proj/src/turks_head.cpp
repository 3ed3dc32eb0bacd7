#include "conlab/turks_head.hpp"

#include "conlab/errors.hpp"

namespace conlab {

namespace {

std::string v(int i) { return "v" + std::to_string(i); }
std::string w(int i) { return "w" + std::to_string(i); }

Integer integral_count(const WeightedGraph& g, const char* what) {
  Rational t = spanning_tree_count(g);
  if (!is_integer(t)) throw DomainError(std::string(what) + " is not integral: " + to_string(t));
  return t.get_num();
}

}  // namespace

TurksHeadIndex::TurksHeadIndex(int n) : n_(n) {
  if (n < 5 || n % 2 == 0 || n % 3 == 0)
    throw DomainError("Turk's head index must be odd, >= 5 and not divisible by 3; got " + std::to_string(n));
}

WeightedGraph build_gamma(TurksHeadIndex index) {
  const int k = index.k();
  std::vector<std::string> labels{"a", "b", "c"};
  for (int i = 1; i <= k; ++i) labels.push_back(v(i));
  for (int i = 1; i <= k; ++i) labels.push_back(w(i));
  WeightedGraph g(labels);

  const Rational one(1);
  g.set_weight("a", "b", one);
  g.set_weight("b", v(1), one);
  g.set_weight("b", w(1), one);
  for (int i = 1; i < k; ++i) {
    g.set_weight(v(i), v(i + 1), one);
    g.set_weight(w(i), w(i + 1), one);
    g.set_weight("a", v(i), one);
    g.set_weight("a", w(i), one);
  }
  g.set_weight("a", v(k), Rational(2));
  g.set_weight("a", w(k), Rational(2));
  g.set_weight(v(k), "c", one);
  g.set_weight(w(k), "c", one);
  g.set_weight("a", "c", Rational(-1));
  return g;
}

WeightedGraph build_gamma_bar(TurksHeadIndex index) { return identify_vertices(build_gamma(index), "b", "c"); }

WeightedGraph build_gamma_x(TurksHeadIndex index, const Rational& x) {
  if (sgn(x) == 0) throw DomainError("the b-c edge weight must be nonzero");
  WeightedGraph g = build_gamma(index);
  g.set_weight("b", "c", x);
  return g;
}

Integer det_turks_head(TurksHeadIndex index) { return integral_count(build_gamma(index), "T(gamma)"); }

Integer det_butterfly(TurksHeadIndex index) { return integral_count(build_gamma_bar(index), "T(gamma_bar)"); }

SymmetricMatrix expected_restriction_block() {
  auto q = [](long p, long d = 1) { return make_rational(p, d); };
  return SymmetricMatrix::from_rows({
      {q(1, 2), q(1, 2), q(-1), q(-1)},
      {q(1, 2), q(5, 2), q(0), q(0)},
      {q(-1), q(0), q(4), q(0)},
      {q(-1), q(0), q(0), q(4)},
  });
}

DetIntReport lemma_det_int_report(TurksHeadIndex index) {
  const int n = index.n();
  const int k = index.k();
  DetIntReport r;
  r.n = n;
  r.det_j = det_turks_head(index);
  r.det_butterfly = det_butterfly(index);
  r.lucas_check = r.det_j == lucas(static_cast<unsigned>(2 * n)) - 2;
  r.butterfly_is_even = mpz_even_p(r.det_butterfly.get_mpz_t()) != 0;
  r.ratio_is_integer = mpz_divisible_p(r.det_butterfly.get_mpz_t(), r.det_j.get_mpz_t()) != 0;
  r.inequality_holds = 2 * r.det_j < r.det_butterfly && r.det_butterfly < 4 * r.det_j;

  const WeightedGraph quarter = build_gamma_x(index, make_rational(-1, 4));
  const WeightedGraph half = build_gamma_x(index, make_rational(-1, 2));
  r.t_quarter = spanning_tree_count(quarter, "a");
  r.t_half = spanning_tree_count(half, "a");

  // Reduced Laplacians at a keep the vertex order b, c, v1.., w1..
  const SymmetricMatrix l_quarter = reduced_laplacian(quarter, "a");
  const std::size_t c_row = quarter.index_of("c") - 1;
  r.scaled_quarter = scale_row_col(l_quarter, c_row, Rational(3));
  r.scaled_quarter_dominance = dominance(r.scaled_quarter);
  r.scaled_quarter_positive_diagonal = true;
  for (std::size_t i = 0; i < r.scaled_quarter.size(); ++i)
    if (sgn(r.scaled_quarter(i, i)) <= 0) r.scaled_quarter_positive_diagonal = false;
  r.scaled_quarter_positive_definite = is_positive_definite(r.scaled_quarter);

  const SymmetricMatrix l_half = reduced_laplacian(half, "a");
  r.half_inertia = inertia(l_half);
  auto row = [&](const std::string& label) { return half.index_of(label) - 1; };
  r.restriction = l_half.principal({row("c"), row("b"), row(v(k)), row(w(k))});
  r.restriction_determinant = determinant(r.restriction);

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw DomainError("n = " + std::to_string(n) + ": " + what);
  };
  require(r.lucas_check, "det(J_n) differs from lucas(2n) - 2");
  require(mpz_odd_p(r.det_j.get_mpz_t()) != 0, "det(J_n) is not odd");
  require(r.butterfly_is_even, "butterfly determinant is not even");
  require(r.inequality_holds, "2 det(J_n) < det_butterfly < 4 det(J_n) fails");
  require(!r.ratio_is_integer, "determinant ratio is an integer");
  require(sgn(r.t_quarter) > 0, "T(gamma(-1/4)) is not positive");
  require(sgn(r.t_half) < 0, "T(gamma(-1/2)) is not negative");
  require(r.t_quarter == Rational(r.det_j) - Rational(r.det_butterfly) / 4, "T(gamma(-1/4)) breaks deletion-contraction");
  require(r.t_half == Rational(r.det_j) - Rational(r.det_butterfly) / 2, "T(gamma(-1/2)) breaks deletion-contraction");
  require(r.scaled_quarter_dominance != Dominance::not_dominant && r.scaled_quarter_positive_diagonal,
          "scaled L(gamma(-1/4); a) is not diagonally dominant with positive diagonal");
  require(r.scaled_quarter_positive_definite, "scaled L(gamma(-1/4); a) is not positive definite");
  require(r.half_inertia == Inertia{static_cast<std::size_t>(n), 1, 0}, "inertia of L(gamma(-1/2); a) is not (n, 1, 0)");
  require(r.restriction == expected_restriction_block(), "restriction block differs from the expected 4x4 matrix");
  require(sgn(r.restriction_determinant) < 0, "restriction block determinant is not negative");
  return r;
}

LaurentPolynomial cha_alexander(int m) {
  if (m < 1) throw DomainError("Cha family index must be >= 1");
  const long sq = static_cast<long>(m) * m;
  return LaurentPolynomial::from_integers(-1, {-sq, 2 * sq + 1, -sq});
}

}  // namespace conlab
