#include "conlab/rational.hpp"

#include <cctype>

#include "conlab/errors.hpp"

namespace conlab {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what), line_(line), column_(column) {}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0, 1);
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 1 + slash + 1);
  Integer n{std::string(num)};
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer, got " + to_string(q));
  return q.get_num();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return conlab::to_string(re_);
  std::string s = sgn(re_) == 0 ? "" : conlab::to_string(re_) + (sgn(im_) > 0 ? " + " : " - ");
  Rational mag = abs(im_);
  if (sgn(re_) == 0 && sgn(im_) < 0) s += "-";
  if (mag != 1) s += conlab::to_string(mag) + "*";
  return s + "i";
}

}  // namespace conlab
