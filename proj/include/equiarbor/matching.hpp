#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/graph.hpp"

namespace equiarbor {

using Matching = std::vector<VertexPair>;

/// Maximum-cardinality matching by Edmonds' blossom contraction. Pairs are
/// (u, v) with u < v, sorted.
Matching maximum_matching(const Graph& g);

/// True when every vertex is covered exactly once by edges of g.
bool is_perfect_matching(const Graph& g, const Matching& m);

struct MatchingResult {
  bool has_perfect = false;
  std::optional<Matching> matching;
};

/// Odd order returns false without searching; a returned matching has passed
/// the cover check.
MatchingResult has_perfect_matching(const Graph& g);

nlohmann::json to_json(const MatchingResult& r);

}  // namespace equiarbor
