#include "conlab/braid.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "conlab/errors.hpp"

namespace conlab {

namespace {

void require_family(int n) {
  if (!in_turks_head_family(n))
    throw DomainError("Turk's head index must satisfy n > 1 and n not divisible by 3; got " + std::to_string(n));
}

LaurentPolynomial t_power(long c, int e) { return LaurentPolynomial::monomial(Rational(c), e); }

// Reduced Burau generator: row i-1 (0-based) of the identity is replaced by
// (t, -t, 1) on columns i-2, i-1, i; the inverse uses (1, -t^-1, t^-1).
LaurentMatrix generator(int strands, int letter) {
  const std::size_t dim = static_cast<std::size_t>(strands - 1);
  LaurentMatrix m = LaurentMatrix::identity(dim);
  const int i = std::abs(letter);
  const std::size_t row = static_cast<std::size_t>(i - 1);
  const bool positive = letter > 0;
  m(row, row) = positive ? t_power(-1, 1) : t_power(-1, -1);
  if (i >= 2) m(row, row - 1) = positive ? t_power(1, 1) : t_power(1, 0);
  if (i <= strands - 2) m(row, row + 1) = positive ? t_power(1, 0) : t_power(1, -1);
  return m;
}

}  // namespace

bool in_turks_head_family(int n) { return n > 1 && n % 3 != 0; }

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) throw DomainError("a braid needs at least 2 strands");
  for (int l : letters_) {
    if (l == 0) throw DomainError("braid letter 0");
    if (std::abs(l) >= strands) throw DomainError("braid letter " + std::to_string(l) + " needs more than " +
                                                  std::to_string(strands) + " strands");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::power(int k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<int> out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw DomainError("braid strand counts differ");
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(out));
}

BraidWord parse_braid(std::string_view text) {
  int strands = 3;
  std::vector<int> letters;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string token(text.substr(pos, end - pos));
    const std::size_t column = pos + 1;
    std::string digits = token;
    bool is_strands = false;
    if (first && token.rfind("strands=", 0) == 0) {
      digits = token.substr(8);
      is_strands = true;
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (digits.empty() || used != digits.size())
      throw ParseError("malformed braid token '" + token + "'", 0, column);
    if (is_strands) {
      if (value < 2) throw ParseError("strand count must be at least 2", 0, column);
      strands = value;
    } else {
      if (value == 0) throw ParseError("braid letter 0 is not a generator", 0, column);
      if (std::abs(value) >= strands)
        throw ParseError("letter " + token + " out of range for " + std::to_string(strands) + " strands", 0, column);
      letters.push_back(value);
    }
    first = false;
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord turks_head_braid(int n) { return BraidWord(3, {1, -2}).power(n); }

LaurentMatrix::LaurentMatrix(std::size_t n) : n_(n), a_(n * n, LaurentPolynomial(Variable::t)) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPolynomial(Rational(1), Variable::t);
  return m;
}

LaurentPolynomial LaurentMatrix::trace() const {
  LaurentPolynomial s(Variable::t);
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

LaurentPolynomial LaurentMatrix::determinant() const {
  // Bareiss over Q[t^{+-1}]; every division below is exact.
  std::vector<LaurentPolynomial> m = a_;
  auto at = [&](std::size_t i, std::size_t j) -> LaurentPolynomial& { return m[i * n_ + j]; };
  LaurentPolynomial prev(Rational(1), Variable::t);
  bool negate = false;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pivot = k;
    while (pivot < n_ && at(pivot, k).is_zero()) ++pivot;
    if (pivot == n_) return LaurentPolynomial(Variable::t);
    if (pivot != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(pivot, j), at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) at(i, j) = divexact(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
      at(i, k) = LaurentPolynomial(Variable::t);
    }
    prev = at(k, k);
  }
  LaurentPolynomial det = n_ == 0 ? LaurentPolynomial(Rational(1), Variable::t) : at(n_ - 1, n_ - 1);
  return negate ? -det : det;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
  LaurentMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
  LaurentMatrix c = a;
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

LaurentMatrix reduced_burau(const BraidWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(w.strands() - 1));
  for (int l : w.letters()) m = m * generator(w.strands(), l);
  return m;
}

bool closure_is_knot(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  int length = 0;
  int x = 0;
  do {
    x = perm[static_cast<std::size_t>(x)];
    ++length;
  } while (x != 0);
  return length == n;
}

LaurentPolynomial alexander_of_closure(const BraidWord& w) {
  if (!closure_is_knot(w)) throw DomainError("braid closure is not a knot");
  const std::size_t dim = static_cast<std::size_t>(w.strands() - 1);
  const LaurentPolynomial det = (LaurentMatrix::identity(dim) - reduced_burau(w)).determinant();
  const LaurentPolynomial cyclotomic =
      LaurentPolynomial::from_integers(0, std::vector<long>(static_cast<std::size_t>(w.strands()), 1));
  return normalize_alexander(divexact(det, cyclotomic));
}

LaurentPolynomial alexander_turks_head(int n) {
  require_family(n);
  const LaurentPolynomial s = reduced_burau(BraidWord(3, {1, -2})).trace();
  // tr M^0 = 2, tr M^1 = s, tr M^(j+1) = s tr M^j - tr M^(j-1) since det M = 1.
  LaurentPolynomial prev(Rational(2), Variable::t);
  LaurentPolynomial cur = s;
  for (int j = 1; j < n; ++j) {
    LaurentPolynomial next = s * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const LaurentPolynomial numerator = LaurentPolynomial(Rational(2), Variable::t) - cur;
  return normalize_alexander(divexact(numerator, LaurentPolynomial::from_integers(0, {1, 1, 1})));
}

LaurentPolynomial conway_turks_head(int n) { return conway_from_alexander(alexander_turks_head(n)); }

std::vector<std::complex<double>> turks_head_roots(int n) {
  require_family(n);
  std::vector<std::complex<double>> roots;
  for (int k = 1; k <= n / 2; ++k) {
    const double c = 2.0 * std::cos(2.0 * k * std::numbers::pi / n) - 1.0;
    const std::complex<double> disc = std::sqrt(std::complex<double>(c * c - 4.0, 0.0));
    roots.push_back(-0.5 * (c + disc));
    roots.push_back(-0.5 * (c - disc));
  }
  return roots;
}

}  // namespace conlab
