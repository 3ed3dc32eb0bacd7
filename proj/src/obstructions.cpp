#include "conlab/obstructions.hpp"

#include <numeric>

#include "conlab/braid.hpp"
#include "conlab/errors.hpp"

namespace conlab {

namespace {

bool is_unit_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) { return gcd(a, b).is_constant(); }

Integer abs_value_at_minus_one(const LaurentPolynomial& p) {
  const GaussianRational v = p.evaluate(GaussianRational(-1));
  return to_integer(abs(v.re()));
}

}  // namespace

ObstructionVerdict fox_milnor_test(const LaurentPolynomial& alexander, std::string knot) {
  if (alexander.variable() != Variable::t || !alexander.is_integral() || !is_symmetric(alexander) ||
      alexander.evaluate(GaussianRational(1)) != GaussianRational(1))
    throw DomainError("Fox-Milnor test needs a normalized integral Alexander polynomial, got " + alexander.to_string());
  ObstructionVerdict v{std::move(knot), alexander, abs_value_at_minus_one(alexander), false, false, std::nullopt};
  v.witness = square_root(alexander);
  v.delta_is_square = v.witness.has_value();
  v.det_is_square = is_perfect_square(v.determinant);
  return v;
}

bool det_square_test_even_turks(int n) {
  if (n % 2 != 0 || !in_turks_head_family(n))
    throw DomainError("expected an even Turk's head index, got " + std::to_string(n));
  return is_perfect_square(lucas(static_cast<unsigned>(2 * n)) - 2);
}

Integer determinant_from_conway(const LaurentPolynomial& conway) {
  const GaussianRational v = conway.evaluate(GaussianRational(0, -2));
  if (sgn(v.re()) != 0 && sgn(v.im()) != 0)
    throw DomainError("value of " + conway.to_string() + " at -2i is neither real nor imaginary");
  return to_integer(abs(sgn(v.re()) != 0 ? v.re() : v.im()));
}

MothPolynomial moth_polynomial(const LaurentPolynomial& conway_k, const LaurentPolynomial& conway_l0) {
  if (conway_k.variable() != Variable::z || conway_l0.variable() != Variable::z)
    throw DomainError("moth polynomial expects Conway polynomials in z");
  if (conway_k.evaluate(GaussianRational(0)) != GaussianRational(1))
    throw DomainError("nabla_K(0) must be 1 for a knot, got " + conway_k.to_string());
  const LaurentPolynomial z = LaurentPolynomial::monomial(Rational(1), 1, Variable::z);
  if (!divides(z, conway_l0) || (!conway_l0.is_zero() && conway_l0.min_exponent() < 1))
    throw DomainError("Conway polynomial of a 2-component link must be divisible by z, got " + conway_l0.to_string());
  return {RationalFunction::reduce(conway_l0, z * conway_k)};
}

LaurentPolynomial butterfly_conway(const LaurentPolynomial& conway_k, const LaurentPolynomial& conway_l0, long p) {
  const LaurentPolynomial z = LaurentPolynomial::monomial(Rational(1), 1, Variable::z);
  return conway_l0 + Rational(p) * z * conway_k;
}

EtaVerdict eta_denominator_obstruction(const LaurentPolynomial& conway_k, const Integer& det_k, const Integer& det_lp) {
  if (sgn(det_k) < 0 || sgn(det_lp) < 0) throw DomainError("determinants must be nonnegative");
  if (determinant_from_conway(conway_k) != det_k)
    throw DomainError("det(K) = " + to_string(det_k) + " does not match |nabla_K(-2i)| for " + conway_k.to_string());
  EtaVerdict v{false, det_k, det_lp, {}};
  v.fires = mpz_divisible_p(det_lp.get_mpz_t(), det_k.get_mpz_t()) == 0;
  v.conclusion = v.fires ? "denominator of eta_m is nonconstant and divides " + conway_k.to_string()
                         : "inconclusive: det(K) divides det(L_b^p(K))";
  return v;
}

IndependenceCertificate independence_certificate(const std::vector<int>& family) {
  IndependenceCertificate cert;
  cert.family = family;
  std::vector<LaurentPolynomial> alexander;
  std::vector<LaurentPolynomial> conway;
  for (int n : family) {
    TurksHeadIndex index(n);  // validates membership
    alexander.push_back(alexander_turks_head(index.n()));
    conway.push_back(conway_from_alexander(alexander.back()));
  }

  cert.pairwise_coprime = true;
  cert.alexander_pairwise_coprime = true;
  cert.conway_pairwise_coprime = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const std::string pair = std::to_string(family[i]) + "," + std::to_string(family[j]);
      if (std::gcd(family[i], family[j]) != 1) {
        cert.pairwise_coprime = false;
        cert.failures.push_back("gcd(" + pair + ") != 1");
      }
      if (!is_unit_gcd(alexander[i], alexander[j])) {
        cert.alexander_pairwise_coprime = false;
        cert.failures.push_back("Alexander polynomials of J_" + std::to_string(family[i]) + ", J_" +
                                std::to_string(family[j]) + " share a factor");
      }
      if (!is_unit_gcd(conway[i], conway[j])) cert.conway_pairwise_coprime = false;
    }

  cert.det_int_ok = true;
  for (int n : family) {
    try {
      cert.det_int_reports.push_back(lemma_det_int_report(TurksHeadIndex(n)));
    } catch (const DomainError& e) {
      cert.det_int_ok = false;
      cert.failures.push_back(e.what());
    }
  }
  cert.conclusion = cert.pairwise_coprime && cert.alexander_pairwise_coprime && cert.det_int_ok;
  return cert;
}

ConnectedSumVerdict connected_sum_square_test(const std::vector<std::pair<LaurentPolynomial, long>>& summands) {
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (std::size_t j = i + 1; j < summands.size(); ++j)
      if (!is_unit_gcd(summands[i].first, summands[j].first))
        throw DomainError("summands " + std::to_string(i) + " and " + std::to_string(j) + " are not coprime");

  ConnectedSumVerdict v;
  LaurentPolynomial product(Rational(1), Variable::t);
  for (const auto& [delta, a] : summands) {
    const unsigned m = static_cast<unsigned>(a < 0 ? -a : a);
    v.parity.push_back(static_cast<int>(m % 2));
    product *= delta.pow(m);
  }
  v.is_square = square_root(product).has_value();
  return v;
}

}  // namespace conlab
