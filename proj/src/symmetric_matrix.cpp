#include "conlab/symmetric_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "conlab/errors.hpp"

namespace conlab {

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::not_dominant: return "not_dominant";
    case Dominance::dominant: return "dominant";
    case Dominance::strongly_dominant: return "strongly_dominant";
  }
  return "?";
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  SymmetricMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) throw DomainError("matrix is not symmetric");
      m.a_[i * m.n_ + j] = rows[i][j];
      m.a_[i * m.n_ + j].canonicalize();
    }
  }
  return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  a_[i * n_ + j] = v;
  a_[i * n_ + j].canonicalize();
  a_[j * n_ + i] = a_[i * n_ + j];
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, const Rational& v) {
  a_[i * n_ + j] += v;
  if (i != j) a_[j * n_ + i] += v;
}

SymmetricMatrix SymmetricMatrix::principal(const std::vector<std::size_t>& indices) const {
  SymmetricMatrix m(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) m.a_[i * m.n_ + j] = (*this)(indices[i], indices[j]);
  return m;
}

SymmetricMatrix SymmetricMatrix::without(std::size_t index) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n_; ++i)
    if (i != index) keep.push_back(i);
  return principal(keep);
}

std::vector<std::vector<Rational>> SymmetricMatrix::rows() const {
  std::vector<std::vector<Rational>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  return out;
}

Rational determinant(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  // Clear denominators row by row, then run integer Bareiss.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).get_num() * (row_lcm / a(i, j).get_den());
    scale *= row_lcm;
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Integer det = n == 0 ? Integer(1) : m[n - 1][n - 1];
  return make_rational(sign * det, scale);
}

std::vector<GershgorinDisk> gershgorin_disks(const SymmetricMatrix& a) {
  std::vector<GershgorinDisk> disks;
  disks.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational radius = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) radius += abs(a(i, j));
    disks.push_back({a(i, i), radius});
  }
  return disks;
}

Dominance dominance(const SymmetricMatrix& a) {
  bool strict = false;
  for (const auto& disk : gershgorin_disks(a)) {
    const Rational magnitude = abs(disk.center);
    if (magnitude < disk.radius) return Dominance::not_dominant;
    if (magnitude > disk.radius) strict = true;
  }
  return strict ? Dominance::strongly_dominant : Dominance::dominant;
}

Inertia inertia(const SymmetricMatrix& a) {
  auto m = a.rows();
  std::vector<std::size_t> active(a.size());
  std::iota(active.begin(), active.end(), 0);
  Inertia result;

  auto drop = [&](std::size_t idx) { std::erase(active, idx); };

  while (!active.empty()) {
    std::size_t p = a.size();
    for (std::size_t i : active)
      if (sgn(m[i][i]) != 0) {
        p = i;
        break;
      }
    if (p != a.size()) {
      (sgn(m[p][p]) > 0 ? result.positive : result.negative) += 1;
      drop(p);
      const Rational pivot = m[p][p];
      for (std::size_t i : active) {
        if (sgn(m[i][p]) == 0) continue;
        const Rational factor = m[i][p] / pivot;
        for (std::size_t j : active) m[i][j] -= factor * m[p][j];
      }
      continue;
    }

    std::size_t q = a.size();
    for (std::size_t i : active) {
      for (std::size_t j : active)
        if (j != i && sgn(m[i][j]) != 0) {
          p = i;
          q = j;
          break;
        }
      if (q != a.size()) break;
    }
    if (q == a.size()) {
      result.zero += active.size();
      break;
    }
    result.positive += 1;
    result.negative += 1;
    drop(p);
    drop(q);
    const Rational off = m[p][q];
    for (std::size_t i : active)
      for (std::size_t j : active) m[i][j] -= (m[i][p] * m[q][j] + m[i][q] * m[p][j]) / off;
  }
  return result;
}

bool is_positive_definite(const SymmetricMatrix& a) { return inertia(a).positive == a.size(); }

SymmetricMatrix scale_row_col(const SymmetricMatrix& a, std::size_t i, const Rational& c) {
  if (sgn(c) == 0) throw DomainError("scale factor must be nonzero");
  if (i >= a.size()) throw DomainError("row index out of range");
  SymmetricMatrix out = a;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) out.set(i, j, Rational(a(i, j) * c));
  out.set(i, i, Rational(a(i, i) * c * c));
  return out;
}

bool is_irreducible(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && sgn(a(i, j)) != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::find(seen.begin(), seen.end(), false) == seen.end();
}

}  // namespace conlab
