#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conlab/rational.hpp"

namespace conlab {

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct GershgorinDisk {
  Rational center;
  Rational radius;
};

enum class Dominance { not_dominant, dominant, strongly_dominant };

std::string to_string(Dominance d);

// Exact symmetric matrix.  set() writes both (i, j) and (j, i).
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n = 0) : n_(n), a_(n * n, Rational(0)) {}
  // Throws DomainError if rows is not square and symmetric.
  static SymmetricMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& v);
  void add(std::size_t i, std::size_t j, const Rational& v);

  // Principal submatrix on the given indices, in that order.
  SymmetricMatrix principal(const std::vector<std::size_t>& indices) const;
  SymmetricMatrix without(std::size_t index) const;

  std::vector<std::vector<Rational>> rows() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

// Fraction-free (Bareiss) elimination with row pivoting; det of the 0x0 matrix is 1.
Rational determinant(const SymmetricMatrix& a);

std::vector<GershgorinDisk> gershgorin_disks(const SymmetricMatrix& a);
Dominance dominance(const SymmetricMatrix& a);

// Sylvester inertia by symmetric congruence reduction.  Nonzero diagonal
// pivots are eliminated one at a time; when the remaining diagonal is zero,
// a nonzero off-diagonal pair is split off as a hyperbolic 2x2 block that
// contributes one positive and one negative eigenvalue.
Inertia inertia(const SymmetricMatrix& a);
bool is_positive_definite(const SymmetricMatrix& a);

// D A D with D = diag(1, ..., c, ..., 1).
SymmetricMatrix scale_row_col(const SymmetricMatrix& a, std::size_t i, const Rational& c);

// True if the off-diagonal support graph is connected.
bool is_irreducible(const SymmetricMatrix& a);

}  // namespace conlab
