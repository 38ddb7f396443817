#include "equiarbor/network.hpp"

#include <algorithm>
#include <numeric>

#include "equiarbor/errors.hpp"

namespace equiarbor {

WeightedNetwork::WeightedNetwork(std::size_t vertex_count) : adjacency_(vertex_count) {}

WeightedNetwork WeightedNetwork::from_graph(const Graph& g) {
  WeightedNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) net.add_conductance(e.u, e.v, Rational(static_cast<long>(e.multiplicity)));
  return net;
}

void WeightedNetwork::check_vertex(Vertex u) const {
  if (u >= adjacency_.size()) {
    throw ParameterError("vertex " + std::to_string(u) + " out of range for network on " +
                         std::to_string(adjacency_.size()) + " vertices");
  }
}

void WeightedNetwork::add_resistor(Vertex u, Vertex v, const Rational& resistance) {
  if (resistance == 0) {
    throw ParameterError("zero-resistance edge " + std::to_string(u) + "-" + std::to_string(v) +
                         "; identify the vertices instead");
  }
  add_conductance(u, v, Rational(1) / resistance);
}

void WeightedNetwork::add_conductance(Vertex u, Vertex v, const Rational& conductance) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
  if (conductance == 0) return;
  Rational& forward = adjacency_[u][v];
  forward += conductance;
  if (forward == 0) {
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
  } else {
    adjacency_[v][u] = forward;
  }
}

void WeightedNetwork::remove_pair(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

Vertex WeightedNetwork::add_vertex() {
  adjacency_.emplace_back();
  return adjacency_.size() - 1;
}

void WeightedNetwork::set_terminals(std::vector<Vertex> terminals) {
  for (Vertex t : terminals) check_vertex(t);
  terminals_ = std::move(terminals);
}

Rational WeightedNetwork::conductance(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = adjacency_[u].find(v);
  return it == adjacency_[u].end() ? Rational(0) : it->second;
}

std::optional<Rational> WeightedNetwork::edge_resistance(Vertex u, Vertex v) const {
  const Rational c = conductance(u, v);
  if (c == 0) return std::nullopt;
  return Rational(1) / c;
}

bool WeightedNetwork::joined(Vertex u, Vertex v) const { return conductance(u, v) != 0; }

const std::map<Vertex, Rational>& WeightedNetwork::neighbours(Vertex u) const {
  check_vertex(u);
  return adjacency_[u];
}

std::vector<WeightedNetwork::Branch> WeightedNetwork::branches() const {
  std::vector<Branch> out;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (auto it = adjacency_[u].upper_bound(u); it != adjacency_[u].end(); ++it) {
      out.push_back({u, it->first, it->second});
    }
  }
  return out;
}

bool WeightedNetwork::all_positive() const {
  for (const auto& row : adjacency_) {
    for (const auto& [v, c] : row) {
      if (c < 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> WeightedNetwork::components() const {
  const std::size_t n = adjacency_.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& [v, c] : adjacency_[comp[head]]) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

RationalMatrix conductance_laplacian(const WeightedNetwork& net) {
  const auto n = static_cast<Eigen::Index>(net.vertex_count());
  RationalMatrix l = RationalMatrix::Zero(n, n);
  for (const auto& b : net.branches()) {
    const auto u = static_cast<Eigen::Index>(b.u);
    const auto v = static_cast<Eigen::Index>(b.v);
    l(u, u) += b.conductance;
    l(v, v) += b.conductance;
    l(u, v) -= b.conductance;
    l(v, u) -= b.conductance;
  }
  return l;
}

NetworkQuotient identify_vertices(const WeightedNetwork& net, const std::vector<std::vector<Vertex>>& groups) {
  const std::size_t n = net.vertex_count();
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), Vertex{0});
  std::vector<bool> grouped(n, false);
  for (const auto& group : groups) {
    if (group.empty()) throw ParameterError("empty group in identify_vertices");
    const Vertex least = *std::min_element(group.begin(), group.end());
    for (Vertex v : group) {
      if (v >= n) throw ParameterError("vertex " + std::to_string(v) + " out of range in identify_vertices");
      if (grouped[v]) throw ParameterError("vertex " + std::to_string(v) + " appears in two groups");
      grouped[v] = true;
      rep[v] = least;
    }
  }
  std::vector<Vertex> label(n, 0);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (rep[v] == v) label[v] = next++;
  }
  NetworkQuotient q{WeightedNetwork(next), std::vector<Vertex>(n)};
  for (Vertex v = 0; v < n; ++v) q.vertex_map[v] = label[rep[v]];
  for (const auto& b : net.branches()) {
    const Vertex a = q.vertex_map[b.u];
    const Vertex c = q.vertex_map[b.v];
    if (a != c) q.network.add_conductance(a, c, b.conductance);
  }
  if (net.terminals()) {
    std::vector<Vertex> mapped;
    for (Vertex t : *net.terminals()) {
      const Vertex m = q.vertex_map[t];
      if (std::find(mapped.begin(), mapped.end(), m) == mapped.end()) mapped.push_back(m);
    }
    q.network.set_terminals(std::move(mapped));
  }
  return q;
}

namespace {

Rational json_rational(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(BigInt(value.get<long long>()));
  throw ParameterError("resistance must be an integer or a \"p/q\" string");
}

Vertex json_vertex(const nlohmann::json& value, std::size_t n) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
    throw ParameterError("vertex must be a non-negative integer");
  }
  const auto v = value.get<std::size_t>();
  if (v >= n) throw ParameterError("vertex " + std::to_string(v) + " out of range");
  return v;
}

}  // namespace

WeightedNetwork network_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw ParameterError("network JSON needs \"vertices\" and \"edges\"");
  }
  const auto n = doc.at("vertices").get<std::size_t>();
  WeightedNetwork net(n);
  for (const auto& e : doc.at("edges")) {
    const Vertex u = json_vertex(e.at("u"), n);
    const Vertex v = json_vertex(e.at("v"), n);
    net.add_resistor(u, v, json_rational(e.at("r")));
  }
  if (doc.contains("terminals")) {
    std::vector<Vertex> terminals;
    for (const auto& t : doc.at("terminals")) terminals.push_back(json_vertex(t, n));
    net.set_terminals(std::move(terminals));
  }
  return net;
}

WeightedNetwork parse_network(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid network JSON: ") + e.what(), e.byte);
  }
  try {
    return network_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("invalid network JSON: ") + e.what());
  }
}

nlohmann::json to_json(const WeightedNetwork& net) {
  nlohmann::json doc;
  doc["vertices"] = net.vertex_count();
  if (net.terminals()) doc["terminals"] = *net.terminals();
  doc["edges"] = nlohmann::json::array();
  for (const auto& b : net.branches()) {
    doc["edges"].push_back({{"u", b.u}, {"v", b.v}, {"r", to_string(Rational(Rational(1) / b.conductance))}});
  }
  return doc;
}

}  // namespace equiarbor
