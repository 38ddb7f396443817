#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/network.hpp"

namespace equiarbor {

enum class TransformKind { Series, Parallel, StarMesh, BipartiteToDoubleStar, StarSynthesis };

std::string to_string(TransformKind kind);

struct AddedEdge {
  Vertex u;
  Vertex v;
  Rational resistance;
};

/// Log of one terminal-preserving substitution. Vertex labels refer to the
/// network the transformation was applied to (added vertices use the labels
/// they received in the result).
struct TransformRecord {
  TransformKind kind = TransformKind::StarMesh;
  std::vector<Vertex> removed_vertices;
  std::vector<AddedEdge> added_edges;
};

nlohmann::json to_json(const TransformRecord& record);

struct TransformResult {
  WeightedNetwork network;
  std::vector<TransformRecord> log;
  /// Old label to new label; kNoVertex for removed vertices.
  std::vector<Vertex> vertex_map;
};

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Star-mesh (Kron) elimination of w: every pair of neighbours a,b gains
/// conductance c(w,a)c(w,b)/W(w). The result drops w and shifts higher labels
/// down by one. Throws ParameterError for terminals and
/// SingularEliminationError when W(w) = 0.
WeightedNetwork eliminate_vertex(const WeightedNetwork& net, Vertex w);

/// Eliminates each vertex of `order` in turn (original labels), compacting once at the end.
TransformResult eliminate_vertices(const WeightedNetwork& net, const std::vector<Vertex>& order);

/// Weighted double star S^w_{m,n} that is equivalent to K_{m,n} on the latter's
/// vertices. Labels: u_i = i-1, v_j = m+j-1, u0 = m+n, v0 = m+n+1; legs
/// 1/n on the u side, 1/m on the v side, and -1/(nm) between the centres.
/// Terminals are the m+n original vertices.
TransformResult bipartite_to_double_star(std::size_t m, std::size_t n);

/// Replaces the unit-resistance K_{|a|,|b|} between parts `a` and `b` of
/// `host` by its double star, appending the two centres as new vertices.
/// Every a-b pair must carry conductance at least one.
TransformResult substitute_bipartite(const WeightedNetwork& host, const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b);

/// Legs (q1,q2,q3) of the 3-leaf star reproducing the pairwise resistances
/// r12, r13, r23. Throws ParameterError for non-positive input and
/// NonRealizableError when the triangle inequality fails.
std::array<Rational, 3> synthesize_star(const Rational& r12, const Rational& r13, const Rational& r23);

struct SEquivalenceWitness {
  Vertex u;
  Vertex v;
  Rational in_first;
  Rational in_second;
};

struct SEquivalence {
  bool equivalent = true;
  std::optional<SEquivalenceWitness> witness;  // first differing pair, lexicographic
};

/// Compares exact resistances on every pair of `terminals` in both networks.
SEquivalence s_equivalent(const WeightedNetwork& a, const WeightedNetwork& b,
                          const std::vector<Vertex>& terminals);

}  // namespace equiarbor
