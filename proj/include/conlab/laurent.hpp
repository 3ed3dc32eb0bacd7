#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conlab/rational.hpp"

namespace conlab {

// u is the symmetric coordinate u = t + t^-1 used when converting
// Alexander polynomials into Conway form.
enum class Variable { t, z, u };

char variable_name(Variable v);

// Polynomial in one variable with integer (possibly negative) exponents and
// rational coefficients.  No zero coefficient is ever stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Rational>;

  explicit LaurentPolynomial(Variable var = Variable::t) : var_(var) {}
  LaurentPolynomial(const Rational& c, Variable var);
  LaurentPolynomial(Terms terms, Variable var);

  static LaurentPolynomial monomial(const Rational& c, int exponent, Variable var = Variable::t);
  // coeffs[i] is the coefficient of var^(lowest + i).
  static LaurentPolynomial from_coefficients(int lowest, const std::vector<Rational>& coeffs,
                                             Variable var = Variable::t);
  static LaurentPolynomial from_integers(int lowest, const std::vector<long>& coeffs,
                                         Variable var = Variable::t);

  Variable variable() const { return var_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral() const;
  // Exponent bounds; both throw DomainError on the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  // max_exponent - min_exponent, or -1 for zero.
  int span() const;
  Rational coefficient(int exponent) const;
  const Rational& leading_coefficient() const;

  LaurentPolynomial shifted(int k) const;
  LaurentPolynomial with_variable(Variable var) const;
  // p(var^-1)
  LaurentPolynomial reflected() const;
  LaurentPolynomial pow(unsigned k) const;

  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return a * Rational(-1); }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  // Ascending exponents, e.g. "-t^-1 + 3 - t".  Parses back with parse_poly.
  std::string to_string() const;

 private:
  void check_same_variable(const LaurentPolynomial& o) const;
  void prune();

  Terms terms_;
  Variable var_;
};

struct DivisionResult {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder;
};

// Ordinary Euclidean division of a by b after shifting both to minimal
// exponent 0; quotient is shifted back so that a = q*b + r exactly.
DivisionResult divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

// q with a = q*b; throws InexactDivision otherwise.
LaurentPolynomial divexact(const LaurentPolynomial& a, const LaurentPolynomial& b);
bool divides(const LaurentPolynomial& d, const LaurentPolynomial& a);

// Monic gcd over Q with minimal exponent 0.  Throws if both are zero.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

bool is_symmetric(const LaurentPolynomial& p);

// The unique +-t^k p that is symmetric and equals 1 at t = 1.
LaurentPolynomial normalize_alexander(const LaurentPolynomial& p);

// q(u) with q(t + t^-1) = p(t), for symmetric p.
LaurentPolynomial to_u_coordinates(const LaurentPolynomial& p);

// q(inner): substitute a polynomial for the variable of q (q must be a
// polynomial, i.e. no negative exponents, unless inner is a monomial).
LaurentPolynomial compose(const LaurentPolynomial& q, const LaurentPolynomial& inner);

// Delta(t) -> Nabla(z) via u = z^2 + 2.
LaurentPolynomial conway_from_alexander(const LaurentPolynomial& alexander);
// Nabla(z) -> Delta(t) via z^2 = t - 2 + t^-1; needs only even powers of z.
LaurentPolynomial alexander_from_conway(const LaurentPolynomial& conway);

// p = sign * var^shift * root^2 with root integral, minimal exponent 0 and
// positive leading coefficient.
struct SquareRootWitness {
  LaurentPolynomial root;
  int sign;
  int shift;
};

std::optional<SquareRootWitness> square_root(const LaurentPolynomial& p);

// num/den reduced over Q, then scaled so both lie in Z[var] with joint
// content 1; den has minimal exponent 0 and positive leading coefficient.
class RationalFunction {
 public:
  static RationalFunction reduce(const LaurentPolynomial& num, const LaurentPolynomial& den);

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

// L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}.
Integer lucas(unsigned n);
bool is_perfect_square(const Integer& n);

}  // namespace conlab
