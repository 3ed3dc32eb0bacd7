// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "conlab/braid.hpp"
#include "conlab/cli.hpp"
#include "conlab/magnus.hpp"
#include "conlab/obstructions.hpp"
#include "conlab/turks_head.hpp"
#include "oracles.hpp"

using namespace conlab;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ - failed_ << "/" << count_ << " checks";
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> notes_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

std::string str(const Integer& n) { return to_string(n); }
std::string str(const Rational& q) { return to_string(q); }

LaurentPolynomial Z(std::vector<long> coeffs, int lowest = 0) {
  return LaurentPolynomial::from_integers(lowest, coeffs, Variable::z);
}

// ---------------------------------------------------------------------------

void ac1(Check& c) {
  for (int n : {5, 7, 11, 13}) {
    const auto start = Clock::now();
    const auto r = cli({"turks", "det", std::to_string(n)});
    const double t = seconds_since(start);
    const std::string expect = str(Integer(lucas(2 * n) - 2));
    c.expect(r.code == 0, "exit code for n=" + std::to_string(n));
    c.expect(has_line(r.out, "det: " + expect), "det line for n=" + std::to_string(n));
    c.expect(has_line(r.out, "lucas_check: true"), "lucas_check for n=" + std::to_string(n));
    c.expect(t < 1.0, "n=" + std::to_string(n) + " took " + std::to_string(t) + " s");
  }
  c.expect(has_line(cli({"turks", "det", "5"}).out, "det: 121"), "det(J_5) = 121");
  c.expect(has_line(cli({"turks", "det", "7"}).out, "det: 841"), "det(J_7) = 841");
}

void ac2(Check& c) {
  const auto start = Clock::now();
  const auto block = expected_restriction_block();
  const std::vector<std::vector<Rational>> display{{Rational(1, 2), Rational(1, 2), -1, -1},
                                                   {Rational(1, 2), Rational(5, 2), 0, 0},
                                                   {-1, 0, 4, 0},
                                                   {-1, 0, 0, 4}};
  c.expect(block.rows() == display, "restriction block differs from the displayed matrix");
  for (int n : {5, 7, 11, 13}) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    DetIntReport r;
    try {
      r = lemma_det_int_report(TurksHeadIndex(n));
    } catch (const std::exception& e) {
      c.expect(false, std::string(e.what()) + tag);
      continue;
    }
    c.expect(sgn(r.t_quarter) > 0, "T(-1/4) > 0" + tag);
    c.expect(sgn(r.t_half) < 0, "T(-1/2) < 0" + tag);
    c.expect(2 * r.det_j < r.det_butterfly && r.det_butterfly < 4 * r.det_j, "2 det < det_b < 4 det" + tag);
    c.expect(r.det_butterfly % 2 == 0, "det_butterfly even" + tag);
    c.expect(!r.ratio_is_integer && r.det_butterfly % r.det_j != 0, "ratio non-integer" + tag);
    c.expect(r.restriction == block, "restriction block" + tag);
    c.expect(sgn(r.restriction_determinant) < 0 && r.restriction_determinant == determinant(r.restriction),
             "restriction determinant negative" + tag);
    c.expect(r.half_inertia == Inertia{static_cast<std::size_t>(n), 1, 0}, "inertia (n,1,0)" + tag);
    c.expect(r.scaled_quarter_dominance == Dominance::strongly_dominant, "strong dominance" + tag);
    c.expect(r.scaled_quarter_positive_diagonal, "positive diagonal" + tag);
    c.expect(r.scaled_quarter_positive_definite && is_positive_definite(r.scaled_quarter), "positive definite" + tag);
  }
  const double t = seconds_since(start);
  c.expect(t < 5.0, "total " + std::to_string(t) + " s");
}

void ac3(Check& c) {
  std::mt19937 rng(20240);
  int graphs = 0;
  for (; graphs < 150; ++graphs) {
    const WeightedGraph g = oracle::random_graph(rng, 7);
    const Rational t = spanning_tree_count(g);
    c.expect(t == spanning_tree_count_bruteforce(g), "matrix-tree vs brute force");
    for (const auto& v : g.vertices()) c.expect(spanning_tree_count(g, v) == t, "pivot " + v);
    for (const auto& e : g.edges())
      c.expect(t == spanning_tree_count(delete_edge(g, e.u, e.v)) +
                        e.weight * spanning_tree_count(contract_edge(g, e.u, e.v)),
               "deletion-contraction on " + e.u + "-" + e.v);
  }
  c.expect(graphs >= 100, "fewer than 100 graphs");
}

void ac4(Check& c) {
  const std::vector<Rational> xs{1, Rational(-1, 4), Rational(-1, 2), Rational(3, 5), Rational(-7, 3)};
  for (int n : {5, 7}) {
    const TurksHeadIndex idx(n);
    const Rational t = spanning_tree_count(build_gamma(idx));
    const Rational tbar = spanning_tree_count(build_gamma_bar(idx));
    for (const auto& x : xs)
      c.expect(spanning_tree_count(build_gamma_x(idx, x)) - t - x * tbar == 0,
               "n=" + std::to_string(n) + " x=" + str(x));
  }
}

void ac5(Check& c) {
  c.expect(alexander_turks_head(2) == LaurentPolynomial::from_integers(-1, {-1, 3, -1}), "Delta(J_2)");
  for (int n : {2, 4, 5, 7, 8}) {
    const auto fast = alexander_turks_head(n);
    const auto v = fast.evaluate(GaussianRational(-1));
    c.expect(v.is_real() && abs(v.re()) == Rational(lucas(2 * n) - 2), "|Delta(-1)| n=" + std::to_string(n));
    c.expect(fast == alexander_of_closure(turks_head_braid(n)), "fast path n=" + std::to_string(n));
  }
  for (int n : {5, 7}) {
    const auto delta = alexander_turks_head(n);
    for (const auto& r : turks_head_roots(n))
      c.expect(std::abs(delta.evaluate(r)) < 1e-8, "residual n=" + std::to_string(n));
  }
  double closest = 1e9;
  for (const auto& a : turks_head_roots(5))
    for (const auto& b : turks_head_roots(7)) closest = std::min(closest, std::abs(a - b));
  c.expect(closest > 1e-6, "J_5/J_7 roots within " + std::to_string(closest));
}

void ac6(Check& c) {
  for (int n : {5, 7, 11}) {
    const auto delta = alexander_turks_head(n);
    const auto v = fox_milnor_test(delta);
    c.expect(v.delta_is_square && v.witness.has_value(), "J_" + std::to_string(n) + " square");
    if (v.witness) {
      const auto& w = *v.witness;
      c.expect(w.root * w.root * LaurentPolynomial::monomial(w.sign, w.shift) == delta,
               "witness round trip n=" + std::to_string(n));
    }
  }
  c.expect(!fox_milnor_test(alexander_turks_head(2)).delta_is_square, "J_2 non-square");
  for (int m = 1; m <= 20; ++m)
    c.expect(!fox_milnor_test(cha_alexander(m)).delta_is_square, "K_" + std::to_string(m) + " non-square");
  const auto start = Clock::now();
  for (long m = 1; m <= 10000; ++m) c.expect(!is_perfect_square(Integer(4 * m * m + 1)), "4n^2+1 square");
  const double t = seconds_since(start);
  c.expect(t < 1.0, "squareness scan took " + std::to_string(t) + " s");
}

void ac7(Check& c) {
  for (unsigned n = 0; n <= 40; ++n) {
    const Integer ln = lucas(n);
    c.expect(ln * ln == lucas(2 * n) + (n % 2 == 0 ? 2 : -2), "Lucas identity n=" + std::to_string(n));
  }
  for (int n : {5, 7, 11, 13})
    c.expect(det_turks_head(TurksHeadIndex(n)) == lucas(n) * lucas(n), "det = L_n^2 n=" + std::to_string(n));
}

void ac8(Check& c) {
  const LaurentPolynomial z = Z({1}, 1);
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto knot = [&] { return Z({1, 0, coef(rng), 0, coef(rng)}); };
  auto even = [&] { return Z({coef(rng), 0, coef(rng)}); };

  for (int trial = 0; trial < 50; ++trial) {
    const auto k = knot();
    const auto l0 = z * even();
    for (long p = -3; p <= 3; ++p) {
      c.expect(butterfly_conway(k, l0, p + 1) == butterfly_conway(k, l0, p) + z * k, "skein step");
      c.expect(butterfly_conway(k, l0, p) - butterfly_conway(k, l0, 0) == LaurentPolynomial(p, Variable::z) * z * k,
               "affine in p");
    }
  }

  // Corpus: L0 = z K h is divisible; L0 = z (K h + r) with 0 < deg r < deg K is not.
  const std::vector<LaurentPolynomial> knots{Z({1, 0, -1}), Z({1, 0, 1}), Z({1, 0, 2}), Z({1, 0, -3, 0, 1}),
                                             Z({1, 0, 3}), Z({1, 0, 1, 0, 1}), Z({1, 0, -2}), Z({1, 0, 4}),
                                             Z({1, 0, -1, 0, -1}), Z({1, 0, 5})};
  int divisible = 0;
  int not_divisible = 0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto& k = knots[i];
    const auto h = Z({static_cast<long>(i) + 1, 0, -1});
    const auto yes = z * k * h;
    const auto no = z * (k * h + Z({static_cast<long>(i % 3) + 1}));
    for (const auto& [l0, expected] : {std::pair{yes, true}, std::pair{no, false}}) {
      c.expect(divides(k, l0) == expected, "corpus labelling");
      (expected ? divisible : not_divisible) += 1;
      for (long p = -3; p <= 3; ++p)
        c.expect(divides(k, butterfly_conway(k, l0, p)) == divides(k, l0), "divisibility transfer");
    }
  }
  c.expect(divisible == 10 && not_divisible == 10, "corpus size");

  const auto v = eta_denominator_obstruction(conway_turks_head(5), 121, det_butterfly(TurksHeadIndex(5)));
  c.expect(v.fires, "eta obstruction for (121, " + str(det_butterfly(TurksHeadIndex(5))) + ")");
}

void ac9(Check& c, std::ostream& log) {
  const auto cert = independence_certificate({5, 7, 11, 13});
  log << "    pairwise_coprime=" << cert.pairwise_coprime
      << " alexander_pairwise_coprime=" << cert.alexander_pairwise_coprime
      << " conway_pairwise_coprime=" << cert.conway_pairwise_coprime << " det_int_ok=" << cert.det_int_ok
      << " reports=" << cert.det_int_reports.size() << " conclusion=" << cert.conclusion << '\n';
  c.expect(cert.pairwise_coprime, "pairwise coprime");
  c.expect(cert.alexander_pairwise_coprime, "Alexander polynomials coprime");
  c.expect(cert.det_int_ok && cert.det_int_reports.size() == 4, "determinant-ratio reports");
  c.expect(cert.failures.empty(), "failures listed");
  c.expect(cert.conclusion, "conclusion");
}

void ac10(Check& c) {
  std::mt19937 rng(1010);
  const int d = 6;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 2;
    const auto u = oracle::random_word(rng, m, 7);
    const auto v = oracle::random_word(rng, m, 7);
    const auto mu = magnus_expand(u, d);
    const auto muv = magnus_expand(u * v, d);
    c.expect(muv == oracle::magnus_series(u * v, d), "expansion vs oracle");
    c.expect(muv == mu * magnus_expand(v, d), "homomorphism");
    const auto inv = magnus_expand(u.inverse(), d);
    c.expect(inv == oracle::magnus_series(u.inverse(), d), "inverse vs oracle");
    c.expect(inv == mu.inverse() && mu * inv == MagnusSeries::one(m, d), "inverse law");
  }
  for (int trial = 0; trial < 50; ++trial) {
    const StringLinkLongitudes link{2, {oracle::random_word(rng, 2, 10), oracle::random_word(rng, 2, 10)}};
    long sum = 0;
    for (int l : link.longitudes[1].letters())
      if (std::abs(l) == 1) sum += l > 0 ? 1 : -1;
    c.expect(mu_invariant(link, {1, 2}) == sum, "mu(12) = exponent sum");
  }
  for (int depth = 2; depth <= 5; ++depth) {
    for (int trial = 0; trial < 10; ++trial) {
      FreeWord w = oracle::random_word(rng, 2, 3);
      for (int k = 2; k <= depth; ++k) w = word_commutator(w, oracle::random_word(rng, 2, 3));
      for (const auto& [mono, coeff] : magnus_expand(w, depth).coefficients())
        c.expect(mono.empty() || static_cast<int>(mono.size()) >= depth, "coefficient below depth");
      const auto first = first_nontrivial_degree(StringLinkLongitudes{1, {w}}, depth + 1);
      c.expect(!first || *first >= depth, "first degree below depth " + std::to_string(depth));
    }
  }
}

void ac11(Check& c) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"turks", "lemma", "5", "--json"}, "turks_lemma_5.json"},
      {{"obstruct", "cha", "3", "--json"}, "obstruct_cha_3.json"},
      {{"independence", "5,7", "--json"}, "independence_5_7.json"},
  };
  for (const auto& [args, file] : cases) {
    std::ifstream in(std::string(CONLAB_GOLDEN_DIR) + "/" + file, std::ios::binary);
    c.expect(static_cast<bool>(in), "missing golden " + file);
    std::ostringstream golden;
    golden << in.rdbuf();
    const auto first = cli(args);
    const auto second = cli(args);
    c.expect(first.code == 0, file + " exit code");
    c.expect(first.out == second.out, file + " differs between runs");
    c.expect(first.out == golden.str(), file + " differs from golden");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"determinant identity det(J_n) = L_2n - 2", ac1},
      {"determinant-ratio lemma for n in {5,7,11,13}", ac2},
      {"matrix-tree / deletion-contraction properties", ac3},
      {"T(gamma(x)) = T(gamma) + x T(gamma_bar)", ac4},
      {"Burau pipeline and root formula", ac5},
      {"Fox-Milnor squareness", ac6},
      {"Lucas identity and det(J_n) = L_n^2", ac7},
      {"skein relation, divisibility transfer, eta obstruction", ac8},
      {"independence certificate {5,7,11,13}", [](Check& c) { ac9(c, std::cout); }},
      {"Magnus expansion suite", ac10},
      {"CLI golden-file determinism", ac11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    std::ostringstream line;
    line << "AC" << i + 1 << (c.ok() ? " PASS " : " FAIL ") << criteria[i].first << " [" << c.summary() << ", "
         << std::fixed;
    line.precision(3);
    line << t << " s]";
    std::cout << line.str() << std::endl;
    if (!c.ok()) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
