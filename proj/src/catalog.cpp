#include "equiarbor/catalog.hpp"

#include <sstream>

#include "equiarbor/errors.hpp"
#include "equiarbor/generators.hpp"

namespace equiarbor {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Generator: return "generator";
    case Provenance::Graph6: return "graph6";
    case Provenance::EdgeList: return "edge-list";
  }
  return "?";
}

Provenance parse_provenance(std::string_view text) {
  for (Provenance p : {Provenance::Generator, Provenance::Graph6, Provenance::EdgeList}) {
    if (to_string(p) == text) return p;
  }
  throw ParseError("unknown manifest format '" + std::string(text) + "'", 0);
}

std::vector<ManifestItem> parse_manifest(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw ParseError("manifest must be a JSON array", 0);
  std::vector<ManifestItem> items;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& row = doc[i];
    const std::string where = "manifest entry " + std::to_string(i);
    if (!row.is_object()) throw ParseError(where + " is not an object", 0);
    for (const char* key : {"name", "format", "payload"}) {
      if (!row.contains(key) || !row[key].is_string()) throw ParseError(where + ": missing string '" + key + "'", 0);
    }
    ManifestItem item;
    item.name = row["name"].get<std::string>();
    item.format = parse_provenance(row["format"].get<std::string>());
    item.payload = row["payload"].get<std::string>();
    if (row.contains("expectedRegularity")) {
      if (!row["expectedRegularity"].is_number_unsigned()) throw ParseError(where + ": bad expectedRegularity", 0);
      item.expected_regularity = row["expectedRegularity"].get<std::size_t>();
    }
    if (row.contains("negativeControl")) item.negative_control = row["negativeControl"].get<bool>();
    if (row.contains("scheme")) item.scheme = row["scheme"].get<bool>();
    items.push_back(std::move(item));
  }
  return items;
}

nlohmann::json to_json(const ManifestItem& item) {
  nlohmann::json doc = {{"name", item.name}, {"format", to_string(item.format)}, {"payload", item.payload}};
  if (item.expected_regularity) doc["expectedRegularity"] = *item.expected_regularity;
  if (item.negative_control) doc["negativeControl"] = true;
  if (item.scheme) doc["scheme"] = true;
  return doc;
}

GraphCatalogEntry load_entry(const ManifestItem& item) {
  GraphCatalogEntry entry;
  entry.name = item.name;
  entry.provenance = item.format;
  entry.expected_regularity = item.expected_regularity;
  switch (item.format) {
    case Provenance::Generator: {
      std::istringstream in(item.payload);
      std::string family;
      in >> family;
      if (family.empty()) throw ParameterError(item.name + ": empty generator payload");
      std::vector<long long> params;
      long long p = 0;
      while (in >> p) params.push_back(p);
      if (!in.eof()) throw ParameterError(item.name + ": generator parameters must be integers");
      entry.graph = generate(family, params);
      break;
    }
    case Provenance::Graph6:
      entry.graph = parse_graph6(item.payload);
      break;
    case Provenance::EdgeList:
      entry.graph = parse_edge_list(item.payload);
      break;
  }
  if (item.expected_regularity && entry.graph.regularity() != item.expected_regularity) {
    throw VerificationError(item.name + ": expected a " + std::to_string(*item.expected_regularity) +
                            "-regular graph");
  }
  return entry;
}

std::vector<ManifestItem> default_catalog() {
  auto gen = [](std::string name, std::string payload, std::size_t k, bool scheme) {
    ManifestItem item;
    item.name = std::move(name);
    item.payload = std::move(payload);
    item.expected_regularity = k;
    item.scheme = scheme;
    return item;
  };
  std::vector<ManifestItem> items = {
      gen("K5", "complete 5", 4, true),
      gen("K12", "complete 12", 11, true),
      gen("K3,3", "complete_bipartite 3 3", 3, true),
      gen("K4,4", "complete_bipartite 4 4", 4, true),
      gen("C5", "cycle 5", 2, true),
      gen("C6", "cycle 6", 2, true),
      gen("C7", "cycle 7", 2, true),
      gen("Q3", "hypercube 3", 3, true),
      gen("Q4", "hypercube 4", 4, true),
      gen("Petersen", "petersen", 3, true),
      gen("H(2,2)", "hamming 2 2", 2, true),
      gen("H(2,3)", "hamming 2 3", 4, true),
      gen("H(3,2)", "hamming 3 2", 3, true),
      gen("H(2,4)", "hamming 2 4", 6, true),
      gen("H(3,3)", "hamming 3 3", 6, true),
      gen("J(4,2)", "johnson 4 2", 4, true),
      gen("J(5,2)", "johnson 5 2", 6, true),
      gen("J(6,2)", "johnson 6 2", 8, true),
      gen("J(6,3)", "johnson 6 3", 9, true),
  };
  ManifestItem s5;
  s5.name = "S5";
  s5.payload = "star 5";
  items.push_back(s5);
  ManifestItem ds;
  ds.name = "S2,3";
  ds.payload = "double_star 2 3";
  items.push_back(ds);
  ManifestItem k4;
  k4.name = "K4 (graph6)";
  k4.format = Provenance::Graph6;
  k4.payload = "C~";
  k4.expected_regularity = 3;
  items.push_back(k4);
  ManifestItem c4x2;
  c4x2.name = "C4 doubled";
  c4x2.format = Provenance::EdgeList;
  c4x2.payload = "4 8\n0 1\n1 2\n2 3\n3 0\n0 1\n1 2\n2 3\n3 0\n";
  c4x2.expected_regularity = 4;
  items.push_back(c4x2);
  ManifestItem prism;
  prism.name = "triangular prism";
  prism.payload = "triangular_prism";
  prism.expected_regularity = 3;
  prism.negative_control = true;
  items.push_back(prism);
  return items;
}

}  // namespace equiarbor
