#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/graph.hpp"
#include "equiarbor/linalg.hpp"

namespace equiarbor {

/// Electrical network: a conductance (1/resistance) per unordered vertex pair.
/// Conductances may be negative but are never zero; an absent pair is an open
/// circuit. Parallel resistors are merged by adding conductances.
class WeightedNetwork {
 public:
  WeightedNetwork() = default;
  explicit WeightedNetwork(std::size_t vertex_count);

  /// Unit resistor per edge copy, so conductance equals multiplicity.
  static WeightedNetwork from_graph(const Graph& g);

  /// Adds a resistor in parallel with whatever joins u and v. Zero resistance
  /// is rejected; identify the vertices instead.
  void add_resistor(Vertex u, Vertex v, const Rational& resistance);
  /// Adds conductance in parallel; a pair whose total becomes zero is removed.
  void add_conductance(Vertex u, Vertex v, const Rational& conductance);
  void remove_pair(Vertex u, Vertex v);
  Vertex add_vertex();

  void set_terminals(std::vector<Vertex> terminals);
  const std::optional<std::vector<Vertex>>& terminals() const { return terminals_; }

  std::size_t vertex_count() const { return adjacency_.size(); }
  /// Zero when the pair is not joined.
  Rational conductance(Vertex u, Vertex v) const;
  std::optional<Rational> edge_resistance(Vertex u, Vertex v) const;
  const std::map<Vertex, Rational>& neighbours(Vertex u) const;
  bool joined(Vertex u, Vertex v) const;

  struct Branch {
    Vertex u;
    Vertex v;
    Rational conductance;
  };
  /// Branches with u < v in lexicographic order.
  std::vector<Branch> branches() const;

  bool all_positive() const;
  /// Vertex sets of the components of the branch graph.
  std::vector<std::vector<Vertex>> components() const;

  friend bool operator==(const WeightedNetwork&, const WeightedNetwork&) = default;

 private:
  void check_vertex(Vertex u) const;

  std::vector<std::map<Vertex, Rational>> adjacency_;
  std::optional<std::vector<Vertex>> terminals_;
};

/// Weighted Laplacian: diagonal holds W(u), off-diagonals hold -c(u,v).
RationalMatrix conductance_laplacian(const WeightedNetwork& net);

/// Merges the given vertex groups (conductances add in parallel, loops vanish).
/// Terminals are mapped through the quotient.
struct NetworkQuotient {
  WeightedNetwork network;
  std::vector<Vertex> vertex_map;
};
NetworkQuotient identify_vertices(const WeightedNetwork& net,
                                  const std::vector<std::vector<Vertex>>& groups);

/// JSON form: {"vertices": n, "terminals": [...], "edges": [{"u":0,"v":1,"r":"p/q"}]}.
WeightedNetwork network_from_json(const nlohmann::json& doc);
WeightedNetwork parse_network(std::string_view text);
nlohmann::json to_json(const WeightedNetwork& net);

}  // namespace equiarbor
