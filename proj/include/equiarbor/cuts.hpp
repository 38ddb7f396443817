#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/graph.hpp"

namespace equiarbor {

inline constexpr std::size_t kDefaultEnumerationLimit = 24;
/// Bipartitions are enumerated as 64-bit masks over vertices 1..n-1.
inline constexpr std::size_t kHardEnumerationLimit = 40;

/// Edge cut of a vertex bipartition (A, B). Crossing edges keep their
/// multiplicity and are oriented with u in A.
struct EdgeCut {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::vector<Edge> crossing;

  /// |C| with multiplicity.
  std::size_t size() const;
  bool is_trivial() const { return side_a.size() == 1 || side_b.size() == 1; }

  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

/// Builds the cut for side A (sorted; B is the complement). Throws
/// ParameterError when either side is empty.
EdgeCut make_cut(const Graph& g, std::vector<Vertex> side_a);

/// lambda(G) from n-1 unit-capacity max-flow runs out of vertex 0. Returns 0
/// for disconnected graphs. Throws ParameterError for fewer than 2 vertices.
std::size_t edge_connectivity(const Graph& g);

/// Every cut with |C| <= max_size, normalised so vertex 0 is in A, sorted by
/// (|A|, A lexicographically). Throws ScaleError above `limit` vertices.
std::vector<EdgeCut> enumerate_cuts(const Graph& g, std::size_t max_size,
                                    std::size_t limit = kDefaultEnumerationLimit);

/// All cuts of size lambda(G), same normalisation and order as enumerate_cuts.
std::vector<EdgeCut> minimum_cuts(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

/// Structural predicates on the bipartite cut graph G[C].
struct CutClassification {
  bool is_trivial = false;
  std::size_t a1_size = 0;
  std::size_t b1_size = 0;
  bool k2_component_free = true;
  /// x -> no vertex u whose closed neighbourhood induces the star of order x
  /// with a leaf of G[C]-degree one. Keys 3..|C|+1.
  std::map<std::size_t, bool> strongly_sx_free;
  /// (x,y) -> no crossing edge uv (u in A) with degrees (x+1, y+1). Keys x+y <= |C|.
  std::map<std::pair<std::size_t, std::size_t>, bool> strongly_sxy_free;
  std::size_t min_degree_in_cut_graph = 0;
  /// Degree of each vertex of G[C] (with multiplicity).
  std::map<Vertex, std::size_t> cut_degree;
};

/// Throws ParameterError when the crossing set does not match the sides.
CutClassification classify_cut(const Graph& g, const EdgeCut& cut);

nlohmann::json to_json(const EdgeCut& cut);
nlohmann::json to_json(const CutClassification& c);

}  // namespace equiarbor
