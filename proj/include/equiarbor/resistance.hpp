#pragma once

#include "equiarbor/graph.hpp"
#include "equiarbor/network.hpp"

namespace equiarbor {

enum class ResistanceMethod { LaplacianSolve, TreeRatio, ClosedForm };

std::string to_string(ResistanceMethod method);

struct ResistanceResult {
  Rational value;
  ResistanceMethod method = ResistanceMethod::LaplacianSolve;
};

/// Number of spanning trees (Matrix-Tree cofactor, multiplicities respected).
/// Zero for disconnected graphs and one for a single vertex.
BigInt spanning_tree_count(const Graph& g);

/// Effective resistance between u and v: inject a unit current at u, ground v,
/// and solve the reduced conductance Laplacian of their component.
/// Throws InfiniteResistanceError when u and v are in different components
/// and SingularNetworkError when the reduced system is singular.
Rational resistance(const WeightedNetwork& net, Vertex u, Vertex v);
Rational resistance(const Graph& g, Vertex u, Vertex v);

/// tau(G_uv) / tau(G); independent of the Laplacian solve.
ResistanceResult tree_ratio_resistance(const Graph& g, Vertex u, Vertex v);

/// Node potentials for a unit current from `source` to the grounded `sink`.
struct UnitCurrentSolution {
  Rational resistance;
  RationalVector potential;  // indexed by vertex; sink is 0, other components are 0
};
UnitCurrentSolution unit_current_potentials(const WeightedNetwork& net, Vertex source, Vertex sink);

/// All pairwise resistances of a connected network from a single inversion of
/// the grounded Laplacian. Throws ConnectivityError or SingularNetworkError.
RationalMatrix resistance_matrix(const WeightedNetwork& net);
RationalMatrix resistance_matrix(const Graph& g);

/// Sum of resistances over edges, with multiplicity. Throws ConnectivityError.
Rational foster_sum(const Graph& g);

/// Total conductance at u. Throws ParameterError for isolated vertices.
Rational w_sum(const WeightedNetwork& net, Vertex u);

}  // namespace equiarbor
