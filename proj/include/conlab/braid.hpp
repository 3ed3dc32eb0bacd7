#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "conlab/laurent.hpp"

namespace conlab {

// Letter +-i stands for sigma_i^{+-1}, 1 <= i < strands.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }

  BraidWord inverse() const;
  BraidWord power(int k) const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// "[strands=k] l1 l2 ..." (default 3 strands).
BraidWord parse_braid(std::string_view text);

// (sigma_1 sigma_2^-1)^n.
BraidWord turks_head_braid(int n);

// Square matrix over Z[t^{+-1}].
class LaurentMatrix {
 public:
  explicit LaurentMatrix(std::size_t n);
  static LaurentMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  LaurentPolynomial& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const LaurentPolynomial& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  LaurentPolynomial trace() const;
  LaurentPolynomial determinant() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<LaurentPolynomial> a_;
};

// Reduced Burau image, (strands - 1) x (strands - 1).
LaurentMatrix reduced_burau(const BraidWord& w);

// Closure of w is a knot iff its permutation is a single cycle.
bool closure_is_knot(const BraidWord& w);

// det(I - burau(w)) / (1 + t + ... + t^(strands-1)), normalized.
LaurentPolynomial alexander_of_closure(const BraidWord& w);

// Same polynomial for J_n via the trace recursion of M = burau(sigma_1 sigma_2^-1).
LaurentPolynomial alexander_turks_head(int n);
LaurentPolynomial conway_turks_head(int n);

// The closed-form roots, two per k = 1..floor(n/2).
std::vector<std::complex<double>> turks_head_roots(int n);

// n > 1 and n not divisible by 3.
bool in_turks_head_family(int n);

}  // namespace conlab
