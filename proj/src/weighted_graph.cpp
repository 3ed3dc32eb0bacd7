#include "conlab/weighted_graph.hpp"

#include <functional>
#include <numeric>

#include "conlab/errors.hpp"

namespace conlab {

WeightedGraph::WeightedGraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(v);
}

void WeightedGraph::add_vertex(const std::string& label) {
  if (label.empty()) throw DomainError("empty vertex label");
  if (!index_.emplace(label, vertices_.size()).second) throw DomainError("duplicate vertex '" + label + "'");
  vertices_.push_back(label);
}

std::size_t WeightedGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw DomainError("unknown vertex '" + label + "'");
  return it->second;
}

std::pair<std::size_t, std::size_t> WeightedGraph::key(const std::string& u, const std::string& v) const {
  std::size_t i = index_of(u);
  std::size_t j = index_of(v);
  if (i == j) throw DomainError("self-loop at '" + u + "'");
  return i < j ? std::pair{i, j} : std::pair{j, i};
}

void WeightedGraph::set_weight(const std::string& u, const std::string& v, const Rational& w) {
  auto k = key(u, v);
  if (sgn(w) == 0)
    weights_.erase(k);
  else
    (weights_[k] = w).canonicalize();
}

void WeightedGraph::add_weight(const std::string& u, const std::string& v, const Rational& w) {
  set_weight(u, v, Rational(weight(u, v) + w));
}

bool WeightedGraph::has_edge(const std::string& u, const std::string& v) const {
  return weights_.count(key(u, v)) != 0;
}

Rational WeightedGraph::weight(const std::string& u, const std::string& v) const {
  auto it = weights_.find(key(u, v));
  return it == weights_.end() ? Rational(0) : it->second;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(weights_.size());
  for (const auto& [k, w] : weights_) out.push_back({vertices_[k.first], vertices_[k.second], w});
  return out;
}

SymmetricMatrix laplacian(const WeightedGraph& g) {
  SymmetricMatrix l(g.vertex_count());
  for (const auto& e : g.edges()) {
    const std::size_t i = g.index_of(e.u);
    const std::size_t j = g.index_of(e.v);
    l.add(i, j, Rational(-e.weight));
    l.add(i, i, e.weight);
    l.add(j, j, e.weight);
  }
  return l;
}

SymmetricMatrix reduced_laplacian(const WeightedGraph& g, const std::string& vertex) {
  return laplacian(g).without(g.index_of(vertex));
}

Rational spanning_tree_count(const WeightedGraph& g) {
  if (g.vertex_count() == 0) throw DomainError("spanning tree count of the empty graph");
  return spanning_tree_count(g, g.vertices().front());
}

Rational spanning_tree_count(const WeightedGraph& g, const std::string& pivot) {
  return determinant(reduced_laplacian(g, pivot));
}

Rational spanning_tree_count_bruteforce(const WeightedGraph& g, std::size_t bound) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("spanning tree count of the empty graph");
  if (n > bound)
    throw DomainError("brute-force enumeration limited to " + std::to_string(bound) + " vertices, graph has " +
                      std::to_string(n));
  struct IndexedEdge {
    std::size_t u, v;
    Rational w;
  };
  std::vector<IndexedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({g.index_of(e.u), g.index_of(e.v), e.weight});

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };

  Rational total = 0;
  // Choose edges in index order; union-find without path compression so a
  // union can be undone by resetting one parent pointer.
  std::function<void(std::size_t, std::size_t, const Rational&)> grow = [&](std::size_t next, std::size_t chosen,
                                                                            const Rational& product) {
    if (chosen == n - 1) {
      total += product;
      return;
    }
    for (std::size_t k = next; k + (n - 1 - chosen) <= edges.size(); ++k) {
      std::size_t ru = find(edges[k].u);
      std::size_t rv = find(edges[k].v);
      if (ru == rv) continue;
      parent[ru] = rv;
      grow(k + 1, chosen + 1, Rational(product * edges[k].w));
      parent[ru] = ru;
    }
  };
  grow(0, 0, Rational(1));
  return total;
}

WeightedGraph delete_edge(const WeightedGraph& g, const std::string& u, const std::string& v) {
  if (!g.has_edge(u, v)) throw DomainError("no edge " + u + "-" + v);
  WeightedGraph out = g;
  out.set_weight(u, v, Rational(0));
  return out;
}

WeightedGraph identify_vertices(const WeightedGraph& g, const std::string& u, const std::string& v) {
  if (g.index_of(u) == g.index_of(v)) throw DomainError("cannot identify a vertex with itself");
  const std::string merged = u + "~" + v;
  WeightedGraph out;
  for (const auto& label : g.vertices()) {
    if (label == v) continue;
    out.add_vertex(label == u ? merged : label);
  }
  auto rename = [&](const std::string& x) { return x == u || x == v ? merged : x; };
  for (const auto& e : g.edges()) {
    const std::string a = rename(e.u);
    const std::string b = rename(e.v);
    if (a == b) continue;  // the identified edge itself
    out.add_weight(a, b, e.weight);
  }
  return out;
}

WeightedGraph contract_edge(const WeightedGraph& g, const std::string& u, const std::string& v) {
  if (!g.has_edge(u, v)) throw DomainError("no edge " + u + "-" + v);
  return identify_vertices(g, u, v);
}

}  // namespace conlab
