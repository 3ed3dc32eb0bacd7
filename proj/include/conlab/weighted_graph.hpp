#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conlab/rational.hpp"
#include "conlab/symmetric_matrix.hpp"

namespace conlab {

struct Edge {
  std::string u;
  std::string v;
  Rational weight;
};

// Simple graph with rational edge weights.  A missing edge is weight 0, and
// setting a weight to 0 removes the edge.  Vertex order is insertion order
// and fixes the row order of the Laplacian.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::vector<std::string> vertices);

  void add_vertex(const std::string& label);
  void set_weight(const std::string& u, const std::string& v, const Rational& w);
  void add_weight(const std::string& u, const std::string& v, const Rational& w);

  const std::vector<std::string>& vertices() const& { return vertices_; }
  std::vector<std::string> vertices() && { return std::move(vertices_); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return weights_.size(); }
  bool has_vertex(const std::string& label) const { return index_.count(label) != 0; }
  bool has_edge(const std::string& u, const std::string& v) const;
  std::size_t index_of(const std::string& label) const;
  Rational weight(const std::string& u, const std::string& v) const;
  // Edges ordered by (index of u, index of v) with u before v.
  std::vector<Edge> edges() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::pair<std::size_t, std::size_t> key(const std::string& u, const std::string& v) const;

  std::vector<std::string> vertices_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> weights_;
};

inline constexpr std::size_t kDefaultBruteForceBound = 10;

SymmetricMatrix laplacian(const WeightedGraph& g);
SymmetricMatrix reduced_laplacian(const WeightedGraph& g, const std::string& vertex);

// Weighted spanning-tree count via det of a reduced Laplacian (the first
// vertex is removed).
Rational spanning_tree_count(const WeightedGraph& g);
Rational spanning_tree_count(const WeightedGraph& g, const std::string& pivot);
// Explicit enumeration of spanning trees; throws if the graph exceeds bound.
Rational spanning_tree_count_bruteforce(const WeightedGraph& g, std::size_t bound = kDefaultBruteForceBound);

WeightedGraph delete_edge(const WeightedGraph& g, const std::string& u, const std::string& v);
// Merges v into u.  The merged vertex keeps u's position and is labelled
// "u~v"; parallel weights are summed and zero sums dropped.
WeightedGraph contract_edge(const WeightedGraph& g, const std::string& u, const std::string& v);
WeightedGraph identify_vertices(const WeightedGraph& g, const std::string& u, const std::string& v);

}  // namespace conlab
