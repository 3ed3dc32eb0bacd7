#pragma once

#include <map>
#include <optional>
#include <vector>

#include "conlab/rational.hpp"

namespace conlab {

// Element of the free group on x_1..x_m; letter +-i is x_i^{+-1}.  Always
// stored freely reduced.
class FreeWord {
 public:
  explicit FreeWord(int generators, std::vector<int> letters = {});

  static FreeWord generator(int generators, int i);

  int generators() const { return generators_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int generators_;
  std::vector<int> letters_;
};

// a b a^-1 b^-1
FreeWord word_commutator(const FreeWord& a, const FreeWord& b);

// Noncommutative power series in X_1..X_m truncated above `degree`.  A key is
// the index sequence of a monomial X_{i1}...X_{ir}; the empty key is the
// constant term.
class MagnusSeries {
 public:
  using Monomial = std::vector<int>;

  MagnusSeries(int generators, int degree);
  static MagnusSeries one(int generators, int degree);

  int generators() const { return generators_; }
  int degree() const { return degree_; }
  const std::map<Monomial, Integer>& coefficients() const& { return coeffs_; }
  std::map<Monomial, Integer> coefficients() && { return std::move(coeffs_); }
  Integer coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Integer& c);

  MagnusSeries inverse() const;  // requires constant term 1

  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b);
  friend MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b);
  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  int generators_;
  int degree_;
  std::map<Monomial, Integer> coeffs_;
};

inline constexpr int kDefaultMagnusDegree = 8;

// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ...
MagnusSeries magnus_expand(const FreeWord& w, int degree);

// Longitudes of a string link, one word per strand, in the meridian generators.
struct StringLinkLongitudes {
  int strands = 0;
  std::vector<FreeWord> longitudes;
};

// mu(i_1 ... i_r j): coefficient of X_{i_1}...X_{i_r} in the expansion of
// longitude j.  `indices` is (i_1, ..., i_r, j).
Integer mu_invariant(const StringLinkLongitudes& link, const std::vector<int>& indices);

// Smallest r <= max_degree with some nonzero length-r coefficient in some
// longitude's expansion.
std::optional<int> first_nontrivial_degree(const StringLinkLongitudes& link, int max_degree);

}  // namespace conlab
