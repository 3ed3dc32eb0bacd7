#include <doctest.h>

#include <cmath>
#include <random>

#include "conlab/braid.hpp"
#include "conlab/errors.hpp"
#include "test_support.hpp"

using namespace conlab;
using conlab::test::P;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters;
  for (int i = len(rng); i > 0; --i) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(strands, letters);
}

std::complex<double> eval(const LaurentPolynomial& p, std::complex<double> x) { return p.evaluate(x); }

LaurentPolynomial derivative(const LaurentPolynomial& p) {
  LaurentPolynomial d(p.variable());
  for (const auto& [e, c] : p.terms())
    if (e != 0) d = d + LaurentPolynomial::monomial(c * e, e - 1, p.variable());
  return d;
}

}  // namespace

TEST_CASE("braid parsing") {
  CHECK(parse_braid("1 -2 1 -2") == BraidWord(3, {1, -2, 1, -2}));
  CHECK(parse_braid("  strands=4   3 -1 ") == BraidWord(4, {3, -1}));
  CHECK(parse_braid("") == BraidWord(3, {}));
  CHECK(parse_braid("strands=2 1 1 1").strands() == 2);

  auto column_of = [](std::string_view s) -> std::size_t {
    try {
      parse_braid(s);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("1 x") == 3);
  CHECK(column_of("1 0") == 3);
  CHECK(column_of("1 3") == 3);
  CHECK(column_of("strands=1") == 1);
  CHECK(column_of("1 strands=4") == 3);
  CHECK(column_of("1 -2a") == 3);
  CHECK(column_of("strands=") == 1);
  CHECK_THROWS_AS(BraidWord(3, {4}), DomainError);
  CHECK_THROWS_AS(BraidWord(1, {}), DomainError);
}

TEST_CASE("braid word algebra") {
  const BraidWord w(3, {1, -2, 2});
  CHECK(w.inverse() == BraidWord(3, {-2, 2, -1}));
  CHECK(w.power(2) == BraidWord(3, {1, -2, 2, 1, -2, 2}));
  CHECK(w.power(-1) == w.inverse());
  CHECK(w.power(0) == BraidWord(3, {}));
  CHECK(turks_head_braid(2) == BraidWord(3, {1, -2, 1, -2}));
  CHECK_THROWS_AS(BraidWord(3, {1}) * BraidWord(4, {1}), DomainError);
}

TEST_CASE("reduced Burau representation") {
  const auto m = reduced_burau(BraidWord(3, {1, -2}));
  CHECK(m.trace() == P(-1, {-1, 1, -1}));
  CHECK(m.determinant() == P(0, {1}));
  CHECK(reduced_burau(BraidWord(3, {})) == LaurentMatrix::identity(2));

  std::mt19937 rng(11);
  for (int strands : {3, 4}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_word(rng, strands, 6);
      const auto b = random_word(rng, strands, 6);
      CHECK(reduced_burau(a * b) == reduced_burau(a) * reduced_burau(b));
      CHECK(reduced_burau(a * a.inverse()) == LaurentMatrix::identity(strands - 1));
      CHECK(reduced_burau(a.inverse()) * reduced_burau(a) == LaurentMatrix::identity(strands - 1));
    }
  }
  // Braid relations hold in the image.
  CHECK(reduced_burau(BraidWord(3, {1, 2, 1})) == reduced_burau(BraidWord(3, {2, 1, 2})));
  CHECK(reduced_burau(BraidWord(4, {1, 3})) == reduced_burau(BraidWord(4, {3, 1})));
}

TEST_CASE("closure components") {
  CHECK(closure_is_knot(BraidWord(3, {1, -2})));
  CHECK_FALSE(closure_is_knot(BraidWord(3, {1, -2}).power(3)));
  CHECK_FALSE(closure_is_knot(BraidWord(2, {1, 1})));
  CHECK(closure_is_knot(BraidWord(2, {1, 1, 1})));
}

TEST_CASE("Alexander polynomials of closures") {
  const auto figure_eight = P(-1, {-1, 3, -1});
  CHECK(alexander_of_closure(parse_braid("1 -2 1 -2")) == figure_eight);
  CHECK(alexander_of_closure(parse_braid("strands=2 1 1 1")) == P(-1, {1, -1, 1}));
  CHECK(alexander_of_closure(parse_braid("strands=2 -1 -1 -1")) == P(-1, {1, -1, 1}));
  CHECK(alexander_of_closure(parse_braid("strands=2 1")) == P(0, {1}));
  CHECK_THROWS_AS(alexander_of_closure(parse_braid("strands=2")), DomainError);
  CHECK_THROWS_AS(alexander_of_closure(turks_head_braid(3)), DomainError);
  CHECK(alexander_turks_head(2) == figure_eight);
  CHECK_THROWS_AS(alexander_turks_head(1), DomainError);
  CHECK(alexander_turks_head(5) == P(-4, {1, -6, 15, -24, 29, -24, 15, -6, 1}));
}

TEST_CASE("fast trace path equals the generic determinant") {
  for (int n : {2, 4, 5, 7, 8, 10, 11}) {
    CAPTURE(n);
    const auto fast = alexander_turks_head(n);
    CHECK(fast == alexander_of_closure(turks_head_braid(n)));
    CHECK(is_symmetric(fast));
    CHECK(fast.evaluate(GaussianRational(1)) == GaussianRational(1));
  }
  CHECK_THROWS_AS(alexander_turks_head(6), DomainError);
  CHECK_THROWS_AS(alexander_turks_head(0), DomainError);
}

TEST_CASE("determinant equals lucas(2n) - 2") {
  for (int n : {2, 4, 5, 7, 8, 11, 13, 14}) {
    const auto v = alexander_turks_head(n).evaluate(GaussianRational(-1));
    CHECK(v.is_real());
    CHECK(abs(v.re()) == Rational(lucas(2 * n) - 2));
  }
}

TEST_CASE("closed-form roots") {
  const auto r2 = turks_head_roots(2);
  REQUIRE(r2.size() == 2);
  const double s5 = std::sqrt(5.0);
  CHECK(std::abs(r2[0] - std::complex<double>((3 - s5) / 2)) < 1e-12);
  CHECK(std::abs(r2[1] - std::complex<double>((3 + s5) / 2)) < 1e-12);

  for (int n : {2, 4, 5, 7, 8, 11}) {
    const auto delta = alexander_turks_head(n);
    const auto roots = turks_head_roots(n);
    CHECK(roots.size() == static_cast<std::size_t>(2 * (n / 2)));
    for (const auto& r : roots) CHECK(std::abs(eval(delta, r)) < 1e-8);
    // The formula lists each distinct root once; odd n square every factor.
    const auto sqfree = divexact(delta, gcd(delta, derivative(delta)));
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      bool seen = false;
      for (std::size_t j = 0; j < i; ++j) seen = seen || std::abs(roots[i] - roots[j]) < 1e-9;
      distinct += seen ? 0 : 1;
    }
    CHECK(sqfree.span() == static_cast<int>(distinct));
    if (n % 2 == 1) CHECK(delta.span() == 2 * sqfree.span());
  }
  const auto a = turks_head_roots(5);
  const auto b = turks_head_roots(7);
  for (const auto& x : a)
    for (const auto& y : b) CHECK(std::abs(x - y) > 1e-6);
}

TEST_CASE("Conway polynomials of the family") {
  CHECK(conway_turks_head(2) == LaurentPolynomial::from_integers(0, {1, 0, -1}, Variable::z));
  for (int n : {2, 4, 5, 7, 8}) {
    const auto c = conway_turks_head(n);
    CHECK(c.coefficient(0) == 1);
    CHECK(alexander_from_conway(c) == alexander_turks_head(n));
  }
}

TEST_CASE("family membership") {
  for (int n : {2, 4, 5, 7, 8, 10, 11}) CHECK(in_turks_head_family(n));
  for (int n : {-1, 0, 1, 3, 6, 9}) CHECK_FALSE(in_turks_head_family(n));
}
