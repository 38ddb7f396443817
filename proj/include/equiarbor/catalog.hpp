#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/graph.hpp"

namespace equiarbor {

enum class Provenance { Generator, Graph6, EdgeList };

std::string to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

/// One manifest row. Payloads: "family p1 p2 ..." for generators, the graph6
/// line, or edge-list text. Optional keys: "expectedRegularity" (count),
/// "negativeControl" (bool, the entry is expected not to be equiarboreal) and
/// "scheme" (bool, also verify the distance-partition scheme).
struct ManifestItem {
  std::string name;
  Provenance format = Provenance::Generator;
  std::string payload;
  std::optional<std::size_t> expected_regularity;
  bool negative_control = false;
  bool scheme = false;
};

struct GraphCatalogEntry {
  std::string name;
  Graph graph;
  std::optional<std::size_t> expected_regularity;
  Provenance provenance = Provenance::Generator;
};

/// The manifest is a JSON array of {name, format, payload, ...}.
std::vector<ManifestItem> parse_manifest(std::string_view text);
nlohmann::json to_json(const ManifestItem& item);

/// Builds the graph; throws on bad payloads or a regularity mismatch.
GraphCatalogEntry load_entry(const ManifestItem& item);

/// The built-in verification catalog (distance-regular families, trees,
/// a multigraph, and the triangular prism as a negative control).
std::vector<ManifestItem> default_catalog();

}  // namespace equiarbor
