#include "equiarbor/transform.hpp"

#include <algorithm>

#include "equiarbor/errors.hpp"
#include "equiarbor/resistance.hpp"

namespace equiarbor {

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::Series: return "series";
    case TransformKind::Parallel: return "parallel";
    case TransformKind::StarMesh: return "star-mesh";
    case TransformKind::BipartiteToDoubleStar: return "bipartite-to-double-star";
    case TransformKind::StarSynthesis: return "star-synthesis";
  }
  return "unknown";
}

nlohmann::json to_json(const TransformRecord& record) {
  nlohmann::json doc;
  doc["kind"] = to_string(record.kind);
  doc["removedVertices"] = record.removed_vertices;
  doc["addedEdges"] = nlohmann::json::array();
  for (const auto& e : record.added_edges) {
    doc["addedEdges"].push_back({{"u", e.u}, {"v", e.v}, {"r", to_string(e.resistance)}});
  }
  return doc;
}

namespace {

bool is_terminal(const WeightedNetwork& net, Vertex w) {
  const auto& t = net.terminals();
  return t && std::find(t->begin(), t->end(), w) != t->end();
}

/// Drops isolated `removed` vertices and relabels the rest in order.
TransformResult compact(const WeightedNetwork& work, const std::vector<bool>& removed,
                        std::vector<TransformRecord> log) {
  const std::size_t n = work.vertex_count();
  TransformResult out;
  out.vertex_map.assign(n, kNoVertex);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) out.vertex_map[v] = next++;
  }
  out.network = WeightedNetwork(next);
  for (const auto& b : work.branches()) {
    out.network.add_conductance(out.vertex_map[b.u], out.vertex_map[b.v], b.conductance);
  }
  if (work.terminals()) {
    std::vector<Vertex> t;
    for (Vertex v : *work.terminals()) t.push_back(out.vertex_map[v]);
    out.network.set_terminals(std::move(t));
  }
  out.log = std::move(log);
  return out;
}

}  // namespace

TransformResult eliminate_vertices(const WeightedNetwork& net, const std::vector<Vertex>& order) {
  WeightedNetwork work = net;
  std::vector<bool> removed(net.vertex_count(), false);
  std::vector<TransformRecord> log;
  for (Vertex w : order) {
    if (w >= net.vertex_count()) throw ParameterError("vertex " + std::to_string(w) + " out of range");
    if (removed[w]) throw ParameterError("vertex " + std::to_string(w) + " eliminated twice");
    if (is_terminal(net, w)) throw ParameterError("cannot eliminate terminal vertex " + std::to_string(w));
    const std::map<Vertex, Rational> legs = work.neighbours(w);
    Rational total = 0;
    for (const auto& [v, c] : legs) total += c;
    if (total == 0) {
      throw SingularEliminationError("conductance sum at vertex " + std::to_string(w) + " is zero");
    }
    TransformRecord record;
    record.removed_vertices = {w};
    record.kind = TransformKind::StarMesh;
    if (legs.size() == 2) {
      const Vertex a = legs.begin()->first;
      const Vertex b = std::next(legs.begin())->first;
      record.kind = work.joined(a, b) ? TransformKind::Parallel : TransformKind::Series;
    }
    for (auto i = legs.begin(); i != legs.end(); ++i) {
      for (auto j = std::next(i); j != legs.end(); ++j) {
        const Rational added = i->second * j->second / total;
        record.added_edges.push_back({i->first, j->first, Rational(1) / added});
        work.add_conductance(i->first, j->first, added);
      }
    }
    for (const auto& [v, c] : legs) work.remove_pair(w, v);
    removed[w] = true;
    log.push_back(std::move(record));
  }
  return compact(work, removed, std::move(log));
}

WeightedNetwork eliminate_vertex(const WeightedNetwork& net, Vertex w) {
  return eliminate_vertices(net, {w}).network;
}

TransformResult bipartite_to_double_star(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw ParameterError("double-star transformation needs m, n >= 1");
  const auto mm = static_cast<long>(m);
  const auto nn = static_cast<long>(n);
  WeightedNetwork net(m + n + 2);
  const Vertex u0 = m + n;
  const Vertex v0 = m + n + 1;
  TransformRecord record;
  record.kind = TransformKind::BipartiteToDoubleStar;
  auto add = [&](Vertex a, Vertex b, const Rational& r) {
    net.add_resistor(a, b, r);
    record.added_edges.push_back({a, b, r});
  };
  for (Vertex i = 0; i < m; ++i) add(i, u0, make_rational(1, nn));
  for (Vertex j = 0; j < n; ++j) add(m + j, v0, make_rational(1, mm));
  add(u0, v0, make_rational(-1, nn * mm));
  std::vector<Vertex> terminals(m + n);
  for (Vertex v = 0; v < m + n; ++v) terminals[v] = v;
  net.set_terminals(terminals);
  TransformResult out{std::move(net), {std::move(record)}, {}};
  out.vertex_map = terminals;
  return out;
}

TransformResult substitute_bipartite(const WeightedNetwork& host, const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b) {
  if (a.empty() || b.empty()) throw ParameterError("both parts of the bipartite subnetwork must be nonempty");
  std::vector<bool> used(host.vertex_count(), false);
  for (const auto* part : {&a, &b}) {
    for (Vertex v : *part) {
      if (v >= host.vertex_count()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
      if (used[v]) throw ParameterError("vertex " + std::to_string(v) + " repeated across parts");
      used[v] = true;
    }
  }
  WeightedNetwork net = host;
  for (Vertex x : a) {
    for (Vertex y : b) {
      if (net.conductance(x, y) < 1) {
        throw ParameterError("pair " + std::to_string(x) + "-" + std::to_string(y) +
                             " does not carry a unit resistor");
      }
      net.add_conductance(x, y, Rational(-1));
    }
  }
  const auto m = static_cast<long>(a.size());
  const auto n = static_cast<long>(b.size());
  const Vertex u0 = net.add_vertex();
  const Vertex v0 = net.add_vertex();
  TransformRecord record;
  record.kind = TransformKind::BipartiteToDoubleStar;
  auto add = [&](Vertex p, Vertex q, const Rational& r) {
    net.add_resistor(p, q, r);
    record.added_edges.push_back({p, q, r});
  };
  for (Vertex x : a) add(x, u0, make_rational(1, n));
  for (Vertex y : b) add(y, v0, make_rational(1, m));
  add(u0, v0, make_rational(-1, n * m));
  TransformResult out{std::move(net), {std::move(record)}, {}};
  out.vertex_map.resize(host.vertex_count());
  for (Vertex v = 0; v < host.vertex_count(); ++v) out.vertex_map[v] = v;
  return out;
}

std::array<Rational, 3> synthesize_star(const Rational& r12, const Rational& r13, const Rational& r23) {
  if (r12 <= 0 || r13 <= 0 || r23 <= 0) throw ParameterError("star synthesis needs positive resistances");
  if (r12 > r13 + r23 || r13 > r12 + r23 || r23 > r12 + r13) {
    throw NonRealizableError("resistances " + to_string(r12) + ", " + to_string(r13) + ", " + to_string(r23) +
                             " violate the triangle inequality");
  }
  return {(r12 + r13 - r23) / 2, (r12 + r23 - r13) / 2, (r13 + r23 - r12) / 2};
}

SEquivalence s_equivalent(const WeightedNetwork& a, const WeightedNetwork& b, const std::vector<Vertex>& terminals) {
  if (terminals.empty()) throw ParameterError("terminal set must be nonempty");
  std::vector<Vertex> s = terminals;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    if (v >= a.vertex_count() || v >= b.vertex_count()) {
      throw ParameterError("terminal " + std::to_string(v) + " missing from one of the networks");
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Rational ra = resistance(a, s[i], s[j]);
      const Rational rb = resistance(b, s[i], s[j]);
      if (ra != rb) return {false, SEquivalenceWitness{s[i], s[j], ra, rb}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace equiarbor
