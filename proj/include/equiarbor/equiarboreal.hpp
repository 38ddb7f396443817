#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "equiarbor/graph.hpp"

namespace equiarbor {

struct UnequalEdges {
  Edge first;
  Edge second;
  Rational first_resistance;
  Rational second_resistance;
};

struct EquiarborealVerdict {
  bool is_equiarboreal = false;
  std::optional<Rational> omega;          // common edge resistance
  std::optional<UnequalEdges> witness;    // lexicographically first unequal pair
};

/// Decides whether every edge carries the same resistance (equivalently lies in
/// the same number of spanning trees). When it does, omega is confirmed to
/// equal (n-1)/m. Throws ConnectivityError or ParameterError (no edges).
EquiarborealVerdict check_equiarboreal(const Graph& g);

struct GodsilBound {
  Rational bound;  // m / (n-1)
  std::size_t lambda = 0;
  bool holds = false;
};

/// lambda(G) >= m/(n-1) for connected equiarboreal G.
/// Throws PreconditionError when g is not equiarboreal.
GodsilBound godsil_bound_check(const Graph& g);

nlohmann::json to_json(const EquiarborealVerdict& verdict);

}  // namespace equiarbor
