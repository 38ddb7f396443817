#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equiarbor/linalg.hpp"

namespace equiarbor {

using Vertex = std::size_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// An undirected edge with u < v and its multiplicity.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline VertexPair ordered(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

/// Loopless undirected multigraph. Parallel edges are stored as a
/// multiplicity on the unordered vertex pair.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Adds `multiplicity` copies of uv. Throws ParameterError on loops or
  /// out-of-range endpoints.
  void add_edge(Vertex u, Vertex v, std::size_t multiplicity = 1);

  std::size_t vertex_count() const { return adjacency_.size(); }
  /// Number of edges counted with multiplicity.
  std::size_t edge_count() const { return edge_count_; }
  /// Number of distinct adjacent pairs.
  std::size_t pair_count() const;

  std::size_t multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  /// Degree counted with multiplicity.
  std::size_t degree(Vertex u) const;
  const std::map<Vertex, std::size_t>& neighbours(Vertex u) const;

  /// Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;

  bool is_simple() const;
  bool is_connected() const;
  std::optional<std::size_t> regularity() const;
  /// Vertex sets of the connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<Vertex>> components() const;
  /// The subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
  Graph induced(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex u) const;

  std::vector<std::map<Vertex, std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Multigraph produced by identify_vertices() with the old-to-new vertex map.
struct Quotient {
  Graph graph;
  std::vector<Vertex> vertex_map;
};

/// Merges each group into a single vertex, deleting loops and keeping parallel
/// edges as multiplicities. New labels follow the smallest original vertex of
/// each class. Throws ParameterError on empty or overlapping groups.
Quotient identify_vertices(const Graph& g, const std::vector<std::vector<Vertex>>& groups);

/// Combinatorial Laplacian D - A with multiplicities.
template <class Scalar>
Matrix<Scalar> laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Matrix<Scalar> l = Matrix<Scalar>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const Scalar m(static_cast<long>(e.multiplicity));
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    l(u, u) += m;
    l(v, v) += m;
    l(u, v) -= m;
    l(v, u) -= m;
  }
  return l;
}

/// All-pairs hop distances; -1 marks unreachable pairs.
std::vector<std::vector<long>> distance_matrix(const Graph& g);

// Text formats.

/// Decodes one graph6 line (an optional ">>graph6<<" header and trailing
/// newline are accepted). Throws ParseError with the failing byte offset.
Graph parse_graph6(std::string_view text);
/// Encodes a simple graph as graph6; throws ParameterError for multigraphs.
std::string to_graph6(const Graph& g);

/// Multigraph edge list: a header line "n m" followed by m lines "u v";
/// repeated lines encode multiplicity. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads either format, deciding by content.
Graph parse_graph_text(std::string_view text);

}  // namespace equiarbor
