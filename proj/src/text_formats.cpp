#include "conlab/text_formats.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "conlab/errors.hpp"

namespace conlab {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  LaurentPolynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    LaurentPolynomial::Terms terms;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      auto [exponent, coeff] = term();
      terms[exponent] += sign * coeff;
      skip_space();
    }
    return LaurentPolynomial(std::move(terms), var_.value_or(Variable::t));
  }

 private:
  std::pair<int, Rational> term() {
    const std::size_t start = pos_;
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && is_digit(peek())) {
      coeff = number();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || (peek() != 't' && peek() != 'z')) fail("expected variable after '*'");
      }
    }
    if (at_end() || (peek() != 't' && peek() != 'z')) {
      if (!have_coeff) fail("expected a coefficient or variable", start);
      return {0, coeff};
    }
    const Variable v = peek() == 't' ? Variable::t : Variable::z;
    if (var_ && *var_ != v) fail("mixed variables t and z");
    var_ = v;
    ++pos_;
    skip_space();
    if (at_end() || peek() != '^') return {1, coeff};
    ++pos_;
    skip_space();
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    if (at_end() || !is_digit(peek())) fail("expected an integer exponent");
    const std::size_t exp_start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    const std::string digits(text_.substr(exp_start, pos_ - exp_start));
    if (digits.size() > 6) fail("exponent too large", exp_start);
    return {sign * std::stoi(digits), coeff};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !is_digit(peek())) fail("expected a denominator");
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what(), start);
    }
  }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError("polynomial: " + what + " at column " + std::to_string(at + 1), 0, at + 1);
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<Variable> var_;
};

struct Line {
  std::size_t number;
  std::vector<std::pair<std::string, std::size_t>> words;  // word, 1-based column
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      if (i == raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && !is_space(raw[j])) ++j;
      line.words.emplace_back(std::string(raw.substr(i, j - i)), i + 1);
      i = j;
    }
    if (!line.words.empty() && line.words.front().first[0] != '#') lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail_at(const char* format, const std::string& what, std::size_t line, std::size_t column) {
  throw ParseError(std::string(format) + ": " + what + " at line " + std::to_string(line) + ", column " +
                       std::to_string(column),
                   line, column);
}

int parse_int(const std::string& word, const char* format, std::size_t line, std::size_t column) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != word.size()) fail_at(format, "expected an integer, got '" + word + "'", line, column);
  return value;
}

}  // namespace

LaurentPolynomial parse_poly(std::string_view text) { return PolyScanner(text).parse(); }

WeightedGraph parse_graph(std::string_view text) {
  const char* fmt = "graph";
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("graph: empty input", 1, 1);
  const Line& header = lines.front();
  if (header.words.size() != 2 || header.words[0].first != "graph")
    fail_at(fmt, "expected header 'graph <n>'", header.number, 1);
  const int n = parse_int(header.words[1].first, fmt, header.number, header.words[1].second);
  if (n < 0) fail_at(fmt, "negative vertex count", header.number, header.words[1].second);

  WeightedGraph g;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto& kw = line.words[0];
    if (kw.first == "vertex") {
      if (line.words.size() != 2) fail_at(fmt, "expected 'vertex <label>'", line.number, kw.second);
      if (g.edge_count() != 0) fail_at(fmt, "vertex declared after edges", line.number, kw.second);
      if (g.has_vertex(line.words[1].first))
        fail_at(fmt, "duplicate vertex '" + line.words[1].first + "'", line.number, line.words[1].second);
      g.add_vertex(line.words[1].first);
    } else if (kw.first == "edge") {
      if (line.words.size() != 4) fail_at(fmt, "expected 'edge <u> <v> <weight>'", line.number, kw.second);
      const auto& [u, ucol] = line.words[1];
      const auto& [v, vcol] = line.words[2];
      if (!g.has_vertex(u)) fail_at(fmt, "unknown vertex '" + u + "'", line.number, ucol);
      if (!g.has_vertex(v)) fail_at(fmt, "unknown vertex '" + v + "'", line.number, vcol);
      if (u == v) fail_at(fmt, "self-loop", line.number, vcol);
      if (g.has_edge(u, v)) fail_at(fmt, "duplicate edge " + u + "-" + v, line.number, kw.second);
      Rational w;
      try {
        w = parse_rational(line.words[3].first);
      } catch (const ParseError& e) {
        fail_at(fmt, e.what(), line.number, line.words[3].second);
      }
      if (sgn(w) == 0) fail_at(fmt, "edge weight 0 (absent edges are simply omitted)", line.number, line.words[3].second);
      g.set_weight(u, v, w);
    } else {
      fail_at(fmt, "unknown directive '" + kw.first + "'", line.number, kw.second);
    }
  }
  if (g.vertex_count() != static_cast<std::size_t>(n))
    fail_at(fmt, "header declares " + std::to_string(n) + " vertices, found " + std::to_string(g.vertex_count()),
            header.number, header.words[1].second);
  return g;
}

std::string format_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.u << ' ' << e.v << ' ' << to_string(e.weight) << '\n';
  return out.str();
}

StringLinkLongitudes parse_longitudes(std::string_view text) {
  const char* fmt = "longitudes";
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("longitudes: empty input", 1, 1);
  const Line& header = lines.front();
  if (header.words.size() != 2 || header.words[0].first != "strands")
    fail_at(fmt, "expected header 'strands <m>'", header.number, 1);
  const int m = parse_int(header.words[1].first, fmt, header.number, header.words[1].second);
  if (m < 1) fail_at(fmt, "strand count must be >= 1", header.number, header.words[1].second);

  std::vector<std::optional<FreeWord>> words(static_cast<std::size_t>(m));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.words.size() < 2 || line.words[0].first != "longitude")
      fail_at(fmt, "expected 'longitude <j>: <letters>'", line.number, line.words[0].second);
    std::string label = line.words[1].first;
    if (label.empty() || label.back() != ':') fail_at(fmt, "expected ':' after strand index", line.number, line.words[1].second);
    label.pop_back();
    const int j = parse_int(label, fmt, line.number, line.words[1].second);
    if (j < 1 || j > m) fail_at(fmt, "strand index out of range", line.number, line.words[1].second);
    if (words[static_cast<std::size_t>(j - 1)])
      fail_at(fmt, "duplicate longitude for strand " + label, line.number, line.words[1].second);
    std::vector<int> letters;
    for (std::size_t w = 2; w < line.words.size(); ++w) {
      const int l = parse_int(line.words[w].first, fmt, line.number, line.words[w].second);
      if (l == 0 || std::abs(l) > m) fail_at(fmt, "letter out of range", line.number, line.words[w].second);
      letters.push_back(l);
    }
    words[static_cast<std::size_t>(j - 1)] = FreeWord(m, std::move(letters));
  }
  StringLinkLongitudes link{m, {}};
  for (int j = 0; j < m; ++j) {
    if (!words[static_cast<std::size_t>(j)])
      fail_at(fmt, "missing longitude for strand " + std::to_string(j + 1), header.number, 1);
    link.longitudes.push_back(*words[static_cast<std::size_t>(j)]);
  }
  return link;
}

std::string format_longitudes(const StringLinkLongitudes& link) {
  std::ostringstream out;
  out << "strands " << link.strands << '\n';
  for (std::size_t j = 0; j < link.longitudes.size(); ++j) {
    out << "longitude " << j + 1 << ':';
    for (int l : link.longitudes[j].letters()) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

}  // namespace conlab
