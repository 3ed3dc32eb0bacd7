#include "conlab/laurent.hpp"

#include <algorithm>

#include "conlab/errors.hpp"

namespace conlab {

namespace {

using Dense = std::vector<Rational>;

// Coefficients from min_exponent upward.
Dense to_dense(const LaurentPolynomial& p) {
  if (p.is_zero()) return {};
  Dense d(static_cast<std::size_t>(p.span() + 1));
  const int low = p.min_exponent();
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - low)] = c;
  return d;
}

void trim(Dense& d) {
  while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

// Long division of ordinary polynomials over Q.
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
  trim(a);
  const std::size_t nb = b.size();
  if (a.size() < nb) return {{}, a};
  Dense q(a.size() - nb + 1);
  const Rational& lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational c = a[i + nb - 1] / lead;
    if (sgn(c) == 0) continue;
    q[i] = c;
    for (std::size_t j = 0; j < nb; ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

GaussianRational power(GaussianRational base, unsigned e) {
  GaussianRational result(1);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

LaurentPolynomial monic_shifted(const LaurentPolynomial& p) {
  LaurentPolynomial q = p.shifted(-p.min_exponent());
  return q * Rational(1 / q.leading_coefficient());
}

}  // namespace

char variable_name(Variable v) {
  switch (v) {
    case Variable::t: return 't';
    case Variable::z: return 'z';
    case Variable::u: return 'u';
  }
  return '?';
}

LaurentPolynomial::LaurentPolynomial(const Rational& c, Variable var) : var_(var) {
  if (sgn(c) != 0) terms_.emplace(0, c).first->second.canonicalize();
}

LaurentPolynomial::LaurentPolynomial(Terms terms, Variable var) : terms_(std::move(terms)), var_(var) {
  prune();
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, int exponent, Variable var) {
  LaurentPolynomial p(var);
  if (sgn(c) != 0) p.terms_.emplace(exponent, c).first->second.canonicalize();
  return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(int lowest, const std::vector<Rational>& coeffs,
                                                       Variable var) {
  Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms[lowest + static_cast<int>(i)] = coeffs[i];
  return LaurentPolynomial(std::move(terms), var);
}

LaurentPolynomial LaurentPolynomial::from_integers(int lowest, const std::vector<long>& coeffs, Variable var) {
  Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms[lowest + static_cast<int>(i)] = Rational(coeffs[i]);
  return LaurentPolynomial(std::move(terms), var);
}

void LaurentPolynomial::prune() {
  for (auto& [e, c] : terms_) c.canonicalize();
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

void LaurentPolynomial::check_same_variable(const LaurentPolynomial& o) const {
  if (var_ != o.var_)
    throw DomainError(std::string("variable mismatch: ") + variable_name(var_) + " vs " + variable_name(o.var_));
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

int LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw DomainError("exponent bound of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw DomainError("exponent bound of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPolynomial::span() const { return is_zero() ? -1 : max_exponent() - min_exponent(); }

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& LaurentPolynomial::leading_coefficient() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  Terms terms;
  for (const auto& [e, c] : terms_) terms.emplace_hint(terms.end(), e + k, c);
  return LaurentPolynomial(std::move(terms), var_);
}

LaurentPolynomial LaurentPolynomial::with_variable(Variable var) const {
  LaurentPolynomial p = *this;
  p.var_ = var;
  return p;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  Terms terms;
  for (const auto& [e, c] : terms_) terms.emplace(-e, c);
  return LaurentPolynomial(std::move(terms), var_);
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result(Rational(1), var_);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

GaussianRational LaurentPolynomial::evaluate(const GaussianRational& x) const {
  if (x.is_zero() && !is_zero() && min_exponent() < 0)
    throw DomainError("evaluation at 0 of a polynomial with negative exponents");
  GaussianRational inv = x.is_zero() ? GaussianRational(0) : x.inverse();
  GaussianRational sum(0);
  for (const auto& [e, c] : terms_) {
    GaussianRational term = e >= 0 ? power(x, static_cast<unsigned>(e)) : power(inv, static_cast<unsigned>(-e));
    sum += term * GaussianRational(c);
  }
  return sum;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(x, e);
  return sum;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_same_variable(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_same_variable(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  check_same_variable(o);
  Terms product;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) product[ea + eb] += ca * cb;
  terms_ = std::move(product);
  prune();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Rational mag = abs(c);
    if (e == 0) {
      out += conlab::to_string(mag);
      continue;
    }
    if (mag != 1) out += conlab::to_string(mag);
    out += variable_name(var_);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

DivisionResult divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.variable() != b.variable()) throw DomainError("variable mismatch in division");
  const Variable v = a.variable();
  if (a.is_zero()) return {LaurentPolynomial(v), LaurentPolynomial(v)};
  auto [q, r] = dense_divmod(to_dense(a), to_dense(b));
  const int ma = a.min_exponent();
  const int mb = b.min_exponent();
  return {LaurentPolynomial::from_coefficients(ma - mb, q, v), LaurentPolynomial::from_coefficients(ma, r, v)};
}

LaurentPolynomial divexact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero())
    throw InexactDivision("inexact division: (" + a.to_string() + ") / (" + b.to_string() + ") leaves remainder " +
                          r.to_string());
  return q;
}

bool divides(const LaurentPolynomial& d, const LaurentPolynomial& a) { return divide(a, d).remainder.is_zero(); }

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.variable() != b.variable()) throw DomainError("variable mismatch in gcd");
  if (a.is_zero()) return monic_shifted(b);
  if (b.is_zero()) return monic_shifted(a);
  Dense x = to_dense(a);
  Dense y = to_dense(b);
  while (!y.empty()) {
    Dense r = dense_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic_shifted(LaurentPolynomial::from_coefficients(0, x, a.variable()));
}

bool is_symmetric(const LaurentPolynomial& p) {
  for (const auto& [e, c] : p.terms())
    if (p.coefficient(-e) != c) return false;
  return true;
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DomainError("cannot normalize the zero polynomial");
  const int total = p.min_exponent() + p.max_exponent();
  if (total % 2 != 0) throw DomainError("no unit multiple of " + p.to_string() + " is symmetric");
  LaurentPolynomial q = p.shifted(-total / 2);
  if (!is_symmetric(q)) throw DomainError("no unit multiple of " + p.to_string() + " is symmetric");
  Rational at_one = 0;
  for (const auto& [e, c] : q.terms()) at_one += c;
  if (at_one == 1) return q;
  if (at_one == -1) return -q;
  throw DomainError("value at 1 of " + p.to_string() + " is " + to_string(at_one) + ", not +-1");
}

LaurentPolynomial to_u_coordinates(const LaurentPolynomial& p) {
  if (!is_symmetric(p)) throw DomainError(p.to_string() + " is not symmetric");
  const LaurentPolynomial u_in_t = LaurentPolynomial::from_integers(-1, {1, 0, 1}, p.variable());
  LaurentPolynomial::Terms result;
  LaurentPolynomial rest = p;
  while (!rest.is_zero()) {
    const int d = rest.max_exponent();
    const Rational c = rest.leading_coefficient();
    result[d] = c;
    if (d == 0) break;
    rest -= c * u_in_t.pow(static_cast<unsigned>(d));
  }
  return LaurentPolynomial(std::move(result), Variable::u);
}

LaurentPolynomial compose(const LaurentPolynomial& q, const LaurentPolynomial& inner) {
  const Variable v = inner.variable();
  LaurentPolynomial result(v);
  if (q.is_zero()) return result;
  std::optional<LaurentPolynomial> inverse;
  if (q.min_exponent() < 0) {
    if (inner.terms().size() != 1) throw DomainError("negative powers of a non-monomial in compose");
    const auto& [e, c] = *inner.terms().begin();
    inverse = LaurentPolynomial::monomial(Rational(1 / c), -e, v);
  }
  for (const auto& [e, c] : q.terms()) {
    LaurentPolynomial term = e >= 0 ? inner.pow(static_cast<unsigned>(e)) : inverse->pow(static_cast<unsigned>(-e));
    result += c * term;
  }
  return result;
}

LaurentPolynomial conway_from_alexander(const LaurentPolynomial& alexander) {
  if (!is_symmetric(alexander) || alexander.evaluate(GaussianRational(1)) != GaussianRational(1))
    throw DomainError("Conway conversion needs a symmetric Alexander polynomial with value 1 at t = 1, got " +
                      alexander.to_string());
  const LaurentPolynomial u_in_z = LaurentPolynomial::from_integers(0, {2, 0, 1}, Variable::z);
  return compose(to_u_coordinates(alexander), u_in_z);
}

LaurentPolynomial alexander_from_conway(const LaurentPolynomial& conway) {
  LaurentPolynomial::Terms in_w;
  for (const auto& [e, c] : conway.terms()) {
    if (e < 0 || e % 2 != 0) throw DomainError("Conway polynomial " + conway.to_string() + " has odd or negative powers");
    in_w.emplace(e / 2, c);
  }
  const LaurentPolynomial z_squared = LaurentPolynomial::from_integers(-1, {1, -2, 1}, Variable::t);
  return compose(LaurentPolynomial(std::move(in_w), Variable::u), z_squared);
}

std::optional<SquareRootWitness> square_root(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DomainError("square root of the zero polynomial");
  if (!p.is_integral()) return std::nullopt;
  const int span = p.span();
  if (span % 2 != 0) return std::nullopt;
  const int sign = sgn(p.leading_coefficient()) > 0 ? 1 : -1;
  const LaurentPolynomial target = p.shifted(-p.min_exponent()) * Rational(sign);

  const Integer lead = to_integer(target.leading_coefficient());
  if (!is_perfect_square(lead)) return std::nullopt;
  const int half = span / 2;
  std::vector<Integer> root(static_cast<std::size_t>(half + 1));
  root[half] = sqrt(lead);
  const Integer twice_top = 2 * root[half];
  for (int j = 1; j <= half; ++j) {
    const int k = half - j;
    Integer known = 0;
    for (int a = k + 1; a < half; ++a) {
      const int b = span - j - a;
      if (b > k && b < half) known += root[a] * root[b];
    }
    Integer residual = to_integer(target.coefficient(span - j)) - known;
    if (!mpz_divisible_p(residual.get_mpz_t(), twice_top.get_mpz_t())) return std::nullopt;
    root[k] = residual / twice_top;
  }
  std::vector<Rational> coeffs(root.begin(), root.end());
  LaurentPolynomial f = LaurentPolynomial::from_coefficients(0, coeffs, p.variable());
  if (f * f != target) return std::nullopt;
  return SquareRootWitness{std::move(f), sign, p.min_exponent()};
}

RationalFunction RationalFunction::reduce(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.variable() != den.variable()) throw DomainError("variable mismatch in rational function");
  const Variable v = den.variable();
  if (num.is_zero()) return RationalFunction(LaurentPolynomial(v), LaurentPolynomial(Rational(1), v));

  const LaurentPolynomial g = gcd(num, den);
  LaurentPolynomial n = divexact(num, g);
  LaurentPolynomial d = divexact(den, g);
  const int shift = d.min_exponent();
  n = n.shifted(-shift);
  d = d.shifted(-shift);

  Integer den_lcm = 1;
  for (const auto* poly : {&n, &d})
    for (const auto& [e, c] : poly->terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  n *= Rational(den_lcm);
  d *= Rational(den_lcm);
  Integer content = 0;
  for (const auto* poly : {&n, &d})
    for (const auto& [e, c] : poly->terms()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  Rational scale = make_rational(sgn(d.leading_coefficient()) < 0 ? Integer(-1) : Integer(1), content);
  return RationalFunction(n * scale, d * scale);
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPolynomial(Rational(1), den_.variable())) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Integer lucas(unsigned n) {
  Integer prev = 2;
  Integer cur = 1;
  if (n == 0) return prev;
  for (unsigned k = 1; k < n; ++k) {
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace conlab
