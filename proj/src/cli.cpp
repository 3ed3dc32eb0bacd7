#include "conlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conlab/braid.hpp"
#include "conlab/errors.hpp"
#include "conlab/magnus.hpp"
#include "conlab/obstructions.hpp"
#include "conlab/text_formats.hpp"
#include "conlab/turks_head.hpp"

namespace conlab::cli {

namespace {

using nlohmann::json;

struct Report {
  std::string subcommand;
  json inputs = json::object();
  json results = json::object();
};

json exact(const Rational& q) { return to_string(q); }
json exact(const Integer& n) { return to_string(n); }

json matrix_rows(const SymmetricMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(exact(v));
    rows.push_back(r);
  }
  return rows;
}

json inertia_json(const Inertia& in) { return json::array({in.positive, in.negative, in.zero}); }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t bruteforce_bound() {
  const char* env = std::getenv("CONCORDANCE_LAB_BRUTEFORCE_BOUND");
  if (!env) return kDefaultBruteForceBound;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0') throw ParseError("CONCORDANCE_LAB_BRUTEFORCE_BOUND is not an integer", 0, 1);
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw ParseError("malformed list item '" + item + "' at column " + std::to_string(pos + 1), 0, pos + 1);
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

json det_int_json(const DetIntReport& r) {
  return {
      {"n", r.n},
      {"det_j", exact(r.det_j)},
      {"det_butterfly", exact(r.det_butterfly)},
      {"ratio", exact(make_rational(r.det_butterfly, r.det_j))},
      {"ratio_is_integer", r.ratio_is_integer},
      {"inequality_holds", r.inequality_holds},
      {"butterfly_is_even", r.butterfly_is_even},
      {"lucas_check", r.lucas_check},
      {"t_quarter", exact(r.t_quarter)},
      {"t_half", exact(r.t_half)},
      {"half_inertia", inertia_json(r.half_inertia)},
      {"restriction", matrix_rows(r.restriction)},
      {"restriction_determinant", exact(r.restriction_determinant)},
      {"scaled_quarter_dominance", to_string(r.scaled_quarter_dominance)},
      {"scaled_quarter_positive_diagonal", r.scaled_quarter_positive_diagonal},
      {"scaled_quarter_positive_definite", r.scaled_quarter_positive_definite},
  };
}

json verdict_json(const ObstructionVerdict& v) {
  json out{
      {"knot", v.knot},
      {"alexander", v.alexander.to_string()},
      {"det", exact(v.determinant)},
      {"delta_is_square", v.delta_is_square},
      {"det_is_square", v.det_is_square},
      {"obstructed", !v.delta_is_square},
      {"witness", nullptr},
  };
  if (v.witness) {
    out["witness"] = v.witness->root.to_string();
    out["witness_sign"] = v.witness->sign;
    out["witness_shift"] = v.witness->shift;
  }
  return out;
}

// Text rendering: nested keys are joined with '.', scalars printed bare.
void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

void emit(const Report& r, const std::string& status, const std::string& error, bool as_json, std::ostream& out) {
  json doc{{"subcommand", r.subcommand}, {"inputs", r.inputs}, {"results", r.results}, {"status", status}};
  if (!error.empty()) doc["error"] = error;
  if (as_json) {
    out << doc.dump(2) << '\n';
    return;
  }
  out << "subcommand: " << r.subcommand << '\n';
  flatten(r.inputs, "input", out);
  flatten(r.results, "", out);
  if (!error.empty()) out << "error: " << error << '\n';
  out << "status: " << status << '\n';
}

void turks_det(Report& r, int n) {
  r.inputs["n"] = n;
  if (!in_turks_head_family(n)) throw DomainError("n must satisfy n > 1 and n not divisible by 3");
  const Integer expected = lucas(static_cast<unsigned>(2 * n)) - 2;
  const Integer from_alexander = to_integer(abs(alexander_turks_head(n).evaluate(GaussianRational(-1)).re()));
  Integer det = from_alexander;
  if (n % 2 == 1 && n >= 5) {
    det = det_turks_head(TurksHeadIndex(n));
    r.results["method"] = "goeritz_graph";
  } else {
    r.results["method"] = "burau";
  }
  r.results["det"] = exact(det);
  r.results["alexander_det"] = exact(from_alexander);
  r.results["lucas_2n_minus_2"] = exact(expected);
  r.results["lucas_check"] = det == expected && from_alexander == expected;
  if (n % 2 == 1) r.results["lucas_n_squared"] = exact(Integer(lucas(static_cast<unsigned>(n)) * lucas(static_cast<unsigned>(n))));
}

void turks_roots(Report& r, int n) {
  r.inputs["n"] = n;
  const LaurentPolynomial delta = alexander_turks_head(n);
  json roots = json::array();
  double worst = 0;
  for (const auto& z : turks_head_roots(n)) {
    worst = std::max(worst, std::abs(delta.evaluate(z)));
    roots.push_back(json::array({format_double(z.real()), format_double(z.imag())}));
  }
  r.results["alexander"] = delta.to_string();
  r.results["roots"] = roots;
  r.results["max_residual_below_1e-8"] = worst < 1e-8;
}

LaurentPolynomial fox_milnor_input(Report& r, const std::string& braid, const std::string& poly) {
  if (braid.empty() == poly.empty()) throw CLI::ValidationError("fox-milnor", "exactly one of --braid or --poly is required");
  if (!braid.empty()) {
    r.inputs["braid"] = braid;
    return alexander_of_closure(parse_braid(braid));
  }
  r.inputs["poly"] = poly;
  const LaurentPolynomial p = parse_poly(poly);
  if (p.variable() != Variable::t) throw DomainError("Alexander polynomial must be in t");
  return normalize_alexander(p);
}

void graph_command(Report& r, const std::string& mode, const std::string& path, const std::string& pivot,
                   const std::vector<std::string>& scales) {
  r.inputs["file"] = path;
  const WeightedGraph g = parse_graph(read_file(path));
  if (g.vertex_count() == 0) throw DomainError("graph has no vertices");
  const std::string root = pivot.empty() ? g.vertices().front() : pivot;
  r.results["vertices"] = g.vertex_count();
  r.results["edges"] = g.edge_count();
  if (mode == "count") {
    const Rational count = spanning_tree_count(g);
    r.results["spanning_tree_count"] = exact(count);
    const std::size_t bound = bruteforce_bound();
    if (g.vertex_count() <= bound) {
      const Rational brute = spanning_tree_count_bruteforce(g, bound);
      r.results["bruteforce"] = exact(brute);
      r.results["oracle_agrees"] = brute == count;
    } else {
      r.results["bruteforce"] = nullptr;
    }
    return;
  }
  r.inputs["pivot"] = root;
  SymmetricMatrix m = reduced_laplacian(g, root);
  json applied = json::array();
  for (const auto& item : scales) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--scale expects <vertex>=<rational>, got '" + item + "'", 0, 1);
    const std::string label = item.substr(0, eq);
    std::size_t row = g.index_of(label);
    const std::size_t pivot_row = g.index_of(root);
    if (row == pivot_row) throw DomainError("cannot scale the removed pivot row");
    if (row > pivot_row) --row;
    m = scale_row_col(m, row, parse_rational(item.substr(eq + 1)));
    applied.push_back(item);
  }
  if (!scales.empty()) r.inputs["scale"] = applied;
  if (mode == "inertia") {
    r.results["inertia"] = inertia_json(inertia(m));
    r.results["determinant"] = exact(determinant(m));
    r.results["positive_definite"] = is_positive_definite(m);
  } else {
    json disks = json::array();
    std::vector<std::string> labels;
    for (const auto& v : g.vertices())
      if (v != root) labels.push_back(v);
    const auto ds = gershgorin_disks(m);
    for (std::size_t i = 0; i < ds.size(); ++i)
      disks.push_back({{"vertex", labels[i]}, {"center", exact(ds[i].center)}, {"radius", exact(ds[i].radius)}});
    r.results["disks"] = disks;
    r.results["dominance"] = to_string(dominance(m));
    r.results["positive_definite"] = is_positive_definite(m);
  }
}

void milnor_command(Report& r, const std::string& path, int degree, bool first_only) {
  r.inputs["file"] = path;
  r.inputs["degree"] = degree;
  const StringLinkLongitudes link = parse_longitudes(read_file(path));
  const auto first = first_nontrivial_degree(link, degree);
  r.results["first_nontrivial_degree"] = first ? json(*first) : json(nullptr);
  if (first_only) return;
  json invariants = json::array();
  for (std::size_t j = 0; j < link.longitudes.size(); ++j) {
    const MagnusSeries series = magnus_expand(link.longitudes[j], degree);
    for (const auto& [mono, c] : series.coefficients()) {
      if (mono.empty()) continue;
      std::string idx;
      for (int i : mono) idx += std::to_string(i) + ",";
      idx += std::to_string(j + 1);
      invariants.push_back({{"indices", idx}, {"value", exact(c)}});
    }
  }
  r.results["mu"] = invariants;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact concordance-obstruction computations", "conlab"};
  app.fallthrough();
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the report as JSON");

  Report report;
  std::function<void()> action;
  int n = 0;
  std::string text;
  std::string braid;
  std::string poly;
  std::string pivot;
  std::vector<std::string> scales;
  std::string file;
  int degree = kDefaultMagnusDegree;

  auto* turks = app.add_subcommand("turks", "Turk's head knots J_n");
  turks->require_subcommand(1);
  for (const char* name : {"det", "lemma", "alexander", "conway", "roots"}) {
    auto* sub = turks->add_subcommand(name);
    sub->add_option("n", n)->required();
    sub->callback([&, mode = std::string(name)] {
      report.subcommand = "turks " + mode;
      action = [&, mode] {
        if (mode == "det") {
          turks_det(report, n);
        } else if (mode == "lemma") {
          report.inputs["n"] = n;
          report.results = det_int_json(lemma_det_int_report(TurksHeadIndex(n)));
        } else if (mode == "alexander") {
          report.inputs["n"] = n;
          const LaurentPolynomial d = alexander_turks_head(n);
          report.results["alexander"] = d.to_string();
          report.results["det"] = exact(to_integer(abs(d.evaluate(GaussianRational(-1)).re())));
        } else if (mode == "conway") {
          report.inputs["n"] = n;
          const LaurentPolynomial c = conway_turks_head(n);
          report.results["conway"] = c.to_string();
          report.results["det"] = exact(determinant_from_conway(c));
        } else {
          turks_roots(report, n);
        }
      };
    });
  }

  auto* braid_cmd = app.add_subcommand("braid", "Braid closures");
  braid_cmd->require_subcommand(1);
  auto* braid_alex = braid_cmd->add_subcommand("alexander");
  braid_alex->add_option("word", text, "e.g. \"1 -2 1 -2\" or \"strands=4 1 2 3\"")->required();
  braid_alex->callback([&] {
    report.subcommand = "braid alexander";
    action = [&] {
      report.inputs["word"] = text;
      const BraidWord w = parse_braid(text);
      const LaurentPolynomial d = alexander_of_closure(w);
      report.results["strands"] = w.strands();
      report.results["alexander"] = d.to_string();
      report.results["det"] = exact(to_integer(abs(d.evaluate(GaussianRational(-1)).re())));
    };
  });

  auto* graph = app.add_subcommand("graph", "Weighted graph files");
  graph->require_subcommand(1);
  for (const char* name : {"count", "inertia", "gershgorin"}) {
    auto* sub = graph->add_subcommand(name);
    sub->add_option("file", file)->required();
    if (std::string(name) != "count") {
      sub->add_option("--pivot", pivot, "Vertex removed from the Laplacian (default: first)");
      sub->add_option("--scale", scales, "Congruence-scale a row/column: <vertex>=<rational>");
    }
    sub->callback([&, mode = std::string(name)] {
      report.subcommand = "graph " + mode;
      action = [&, mode] { graph_command(report, mode, file, pivot, scales); };
    });
  }

  auto* obstruct = app.add_subcommand("obstruct", "Concordance obstructions");
  obstruct->require_subcommand(1);
  auto* fox = obstruct->add_subcommand("fox-milnor");
  fox->add_option("--braid", braid);
  fox->add_option("--poly", poly);
  fox->callback([&] {
    report.subcommand = "obstruct fox-milnor";
    action = [&] {
      const LaurentPolynomial delta = fox_milnor_input(report, braid, poly);
      report.results = verdict_json(fox_milnor_test(delta, braid.empty() ? "poly" : "braid"));
    };
  });
  auto* cha = obstruct->add_subcommand("cha");
  cha->add_option("n", n)->required();
  cha->callback([&] {
    report.subcommand = "obstruct cha";
    action = [&] {
      report.inputs["n"] = n;
      report.results = verdict_json(fox_milnor_test(cha_alexander(n), "K_" + std::to_string(n)));
      report.results["det_formula_4n2_plus_1"] = exact(Integer(4L * n * n + 1));
    };
  });

  auto* indep = app.add_subcommand("independence", "Independence certificate for {J_n}");
  indep->add_option("family", text, "Comma-separated odd indices, e.g. 5,7,11,13")->required();
  indep->callback([&] {
    report.subcommand = "independence";
    action = [&] {
      report.inputs["family"] = text;
      const auto cert = independence_certificate(parse_int_list(text));
      json reports = json::array();
      for (const auto& rep : cert.det_int_reports) reports.push_back(det_int_json(rep));
      report.results = {
          {"family", cert.family},
          {"pairwise_coprime", cert.pairwise_coprime},
          {"alexander_pairwise_coprime", cert.alexander_pairwise_coprime},
          {"conway_pairwise_coprime", cert.conway_pairwise_coprime},
          {"det_int_ok", cert.det_int_ok},
          {"det_int_reports", reports},
          {"failures", cert.failures},
          {"conclusion", cert.conclusion},
      };
    };
  });

  auto* milnor = app.add_subcommand("milnor", "Magnus expansion of string-link longitudes");
  milnor->add_option("--file", file)->required();
  milnor->add_option("--degree", degree)->check(CLI::Range(1, 16));
  auto* first_degree = milnor->add_subcommand("first-degree", "Only the lowest nonvanishing degree");
  milnor->callback([&] {
    report.subcommand = first_degree->parsed() ? "milnor first-degree" : "milnor";
    action = [&] { milnor_command(report, file, degree, first_degree->parsed()); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    action();
  } catch (const conlab::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    emit(report, "usage_error", e.what(), as_json, out);
    return kExitUsageError;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    emit(report, "usage_error", e.what(), as_json, out);
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    emit(report, "error", e.what(), as_json, out);
    return kExitDomainError;
  }
  emit(report, "ok", "", as_json, out);
  return kExitOk;
}

}  // namespace conlab::cli
