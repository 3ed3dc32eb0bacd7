#include "conlab/magnus.hpp"

#include <cstdlib>

#include "conlab/errors.hpp"

namespace conlab {

FreeWord::FreeWord(int generators, std::vector<int> letters) : generators_(generators) {
  if (generators < 1) throw DomainError("free group needs at least one generator");
  for (int l : letters) {
    if (l == 0 || std::abs(l) > generators)
      throw DomainError("letter " + std::to_string(l) + " out of range for " + std::to_string(generators) +
                        " generators");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int generators, int i) { return FreeWord(generators, {i}); }

FreeWord FreeWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return FreeWord(generators_, std::move(inv));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.generators_ != b.generators_) throw DomainError("generator counts differ");
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(a.generators_, std::move(letters));
}

FreeWord word_commutator(const FreeWord& a, const FreeWord& b) { return a * b * a.inverse() * b.inverse(); }

MagnusSeries::MagnusSeries(int generators, int degree) : generators_(generators), degree_(degree) {
  if (degree < 0) throw DomainError("negative truncation degree");
}

MagnusSeries MagnusSeries::one(int generators, int degree) {
  MagnusSeries s(generators, degree);
  s.coeffs_[{}] = 1;
  return s;
}

Integer MagnusSeries::coefficient(const Monomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void MagnusSeries::add(const Monomial& m, const Integer& c) {
  if (static_cast<int>(m.size()) > degree_ || c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.generators_ != b.generators_ || a.degree_ != b.degree_) throw DomainError("series shapes differ");
  MagnusSeries c(a.generators_, a.degree_);
  for (const auto& [ma, ca] : a.coeffs_)
    for (const auto& [mb, cb] : b.coeffs_) {
      if (ma.size() + mb.size() > static_cast<std::size_t>(a.degree_)) continue;
      MagnusSeries::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      c.add(m, ca * cb);
    }
  return c;
}

MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b) {
  MagnusSeries c = a;
  for (const auto& [m, v] : b.coeffs_) c.add(m, -v);
  return c;
}

MagnusSeries MagnusSeries::inverse() const {
  if (coefficient({}) != 1) throw DomainError("series inverse needs constant term 1");
  // (1 + r)^-1 = sum_k (-r)^k, and r^k vanishes past the truncation degree.
  MagnusSeries minus_r = one(generators_, degree_) - *this;
  MagnusSeries term = one(generators_, degree_);
  MagnusSeries sum = term;
  for (int k = 1; k <= degree_; ++k) {
    term = term * minus_r;
    for (const auto& [m, c] : term.coeffs_) sum.add(m, c);
  }
  return sum;
}

MagnusSeries magnus_expand(const FreeWord& w, int degree) {
  if (degree < 1) throw DomainError("Magnus truncation degree must be >= 1");
  const int m = w.generators();
  MagnusSeries result = MagnusSeries::one(m, degree);
  for (int l : w.letters()) {
    const int i = std::abs(l);
    MagnusSeries factor = MagnusSeries::one(m, degree);
    if (l > 0) {
      factor.add({i}, 1);
    } else {
      MagnusSeries::Monomial power;
      for (int k = 1; k <= degree; ++k) {
        power.push_back(i);
        factor.add(power, k % 2 == 0 ? 1 : -1);
      }
    }
    result = result * factor;
  }
  return result;
}

Integer mu_invariant(const StringLinkLongitudes& link, const std::vector<int>& indices) {
  if (indices.empty()) throw DomainError("empty Milnor multi-index");
  const int j = indices.back();
  if (j < 1 || j > static_cast<int>(link.longitudes.size()))
    throw DomainError("strand index " + std::to_string(j) + " out of range");
  const FreeWord& longitude = link.longitudes[static_cast<std::size_t>(j - 1)];
  MagnusSeries::Monomial word(indices.begin(), indices.end() - 1);
  for (int i : word)
    if (i < 1 || i > longitude.generators()) throw DomainError("index " + std::to_string(i) + " out of range");
  if (word.empty()) return 0;
  return magnus_expand(longitude, static_cast<int>(word.size())).coefficient(word);
}

std::optional<int> first_nontrivial_degree(const StringLinkLongitudes& link, int max_degree) {
  if (max_degree < 1) throw DomainError("maximum degree must be >= 1");
  std::optional<int> best;
  for (const auto& l : link.longitudes) {
    const MagnusSeries series = magnus_expand(l, max_degree);
    for (const auto& [m, c] : series.coefficients()) {
      const int r = static_cast<int>(m.size());
      if (r > 0 && (!best || r < *best)) best = r;
    }
  }
  return best;
}

}  // namespace conlab
