#include "equiarbor/resistance.hpp"

#include <algorithm>

#include "equiarbor/errors.hpp"

namespace equiarbor {

std::string to_string(ResistanceMethod method) {
  switch (method) {
    case ResistanceMethod::LaplacianSolve: return "laplacian-solve";
    case ResistanceMethod::TreeRatio: return "tree-ratio";
    case ResistanceMethod::ClosedForm: return "closed-form";
  }
  return "unknown";
}

BigInt spanning_tree_count(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (n <= 1) return BigInt(n == 1 ? 1 : 0);
  const IntegerMatrix l = laplacian<BigInt>(g);
  return determinant(l.bottomRightCorner(n - 1, n - 1));
}

namespace {

void check_pair(std::size_t n, Vertex u, Vertex v) {
  if (u >= n || v >= n) throw ParameterError("vertex out of range in resistance query");
  if (u == v) throw ParameterError("resistance needs distinct vertices");
}

/// Reduced conductance Laplacian of `comp` with `ground` removed, and the
/// position of every other member in it.
RationalMatrix grounded_laplacian(const WeightedNetwork& net, const std::vector<Vertex>& comp, Vertex ground,
                                  std::vector<Eigen::Index>& index) {
  index.assign(net.vertex_count(), -1);
  Eigen::Index next = 0;
  for (Vertex v : comp) {
    if (v != ground) index[v] = next++;
  }
  RationalMatrix l = RationalMatrix::Zero(next, next);
  for (Vertex u : comp) {
    if (u == ground) continue;
    for (const auto& [v, c] : net.neighbours(u)) {
      l(index[u], index[u]) += c;
      if (v != ground) l(index[u], index[v]) -= c;
    }
  }
  return l;
}

const std::vector<Vertex>& component_of(const std::vector<std::vector<Vertex>>& comps, Vertex v) {
  for (const auto& c : comps) {
    if (std::binary_search(c.begin(), c.end(), v)) return c;
  }
  throw ParameterError("vertex out of range");
}

}  // namespace

UnitCurrentSolution unit_current_potentials(const WeightedNetwork& net, Vertex source, Vertex sink) {
  check_pair(net.vertex_count(), source, sink);
  const auto comps = net.components();
  const auto& comp = component_of(comps, sink);
  if (!std::binary_search(comp.begin(), comp.end(), source)) {
    throw InfiniteResistanceError("vertices " + std::to_string(source) + " and " + std::to_string(sink) +
                                  " lie in different components");
  }
  std::vector<Eigen::Index> index;
  const RationalMatrix l = grounded_laplacian(net, comp, sink, index);
  RationalVector rhs = RationalVector::Zero(l.rows());
  rhs(index[source]) = 1;
  RationalVector phi;
  try {
    phi = solve(l, rhs);
  } catch (const SingularSystemError&) {
    throw SingularNetworkError("grounded conductance system for " + std::to_string(source) + "-" +
                               std::to_string(sink) + " is singular");
  }
  UnitCurrentSolution out;
  out.potential = RationalVector::Zero(static_cast<Eigen::Index>(net.vertex_count()));
  for (Vertex v : comp) {
    if (v != sink) out.potential(static_cast<Eigen::Index>(v)) = phi(index[v]);
  }
  out.resistance = phi(index[source]);
  return out;
}

Rational resistance(const WeightedNetwork& net, Vertex u, Vertex v) {
  return unit_current_potentials(net, u, v).resistance;
}

Rational resistance(const Graph& g, Vertex u, Vertex v) { return resistance(WeightedNetwork::from_graph(g), u, v); }

ResistanceResult tree_ratio_resistance(const Graph& g, Vertex u, Vertex v) {
  check_pair(g.vertex_count(), u, v);
  const BigInt trees = spanning_tree_count(g);
  if (trees == 0) throw InfiniteResistanceError("tree ratio undefined on a disconnected graph");
  const BigInt merged = spanning_tree_count(identify_vertices(g, {{u, v}}).graph);
  return {Rational(merged, trees), ResistanceMethod::TreeRatio};
}

RationalMatrix resistance_matrix(const WeightedNetwork& net) {
  const std::size_t n = net.vertex_count();
  if (n == 0) return RationalMatrix(0, 0);
  const auto comps = net.components();
  if (comps.size() != 1) throw ConnectivityError("resistance matrix needs a connected network");
  std::vector<Eigen::Index> index;
  const Vertex ground = n - 1;
  const RationalMatrix l = grounded_laplacian(net, comps.front(), ground, index);
  RationalMatrix x;
  try {
    x = inverse(l);
  } catch (const SingularSystemError&) {
    throw SingularNetworkError("grounded conductance Laplacian is singular");
  }
  // Pad with the grounded vertex, whose potential is identically zero.
  RationalMatrix full = RationalMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  full.topLeftCorner(l.rows(), l.rows()) = x;
  RationalMatrix omega(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < omega.rows(); ++i) {
    for (Eigen::Index j = 0; j < omega.cols(); ++j) omega(i, j) = full(i, i) + full(j, j) - 2 * full(i, j);
  }
  return omega;
}

RationalMatrix resistance_matrix(const Graph& g) { return resistance_matrix(WeightedNetwork::from_graph(g)); }

Rational foster_sum(const Graph& g) {
  if (!g.is_connected()) throw ConnectivityError("Foster's formula needs a connected graph");
  const RationalMatrix omega = resistance_matrix(g);
  Rational total = 0;
  for (const Edge& e : g.edges()) {
    total += static_cast<long>(e.multiplicity) * omega(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v));
  }
  return total;
}

Rational w_sum(const WeightedNetwork& net, Vertex u) {
  const auto& nbrs = net.neighbours(u);
  if (nbrs.empty()) throw ParameterError("vertex " + std::to_string(u) + " has no incident edge");
  Rational total = 0;
  for (const auto& [v, c] : nbrs) total += c;
  return total;
}

}  // namespace equiarbor
