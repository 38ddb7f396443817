#include "equiarbor/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>

#include "equiarbor/errors.hpp"

namespace equiarbor {

std::size_t EdgeCut::size() const {
  std::size_t total = 0;
  for (const Edge& e : crossing) total += e.multiplicity;
  return total;
}

EdgeCut make_cut(const Graph& g, std::vector<Vertex> side_a) {
  const std::size_t n = g.vertex_count();
  std::sort(side_a.begin(), side_a.end());
  side_a.erase(std::unique(side_a.begin(), side_a.end()), side_a.end());
  std::vector<bool> in_a(n, false);
  for (Vertex v : side_a) {
    if (v >= n) throw ParameterError("cut vertex " + std::to_string(v) + " out of range");
    in_a[v] = true;
  }
  EdgeCut cut;
  cut.side_a = std::move(side_a);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_a[v]) cut.side_b.push_back(v);
  }
  if (cut.side_a.empty() || cut.side_b.empty()) throw ParameterError("both sides of a cut must be nonempty");
  for (Vertex u : cut.side_a) {
    for (const auto& [v, m] : g.neighbours(u)) {
      if (!in_a[v]) cut.crossing.push_back({u, v, m});
    }
  }
  return cut;
}

namespace {

/// Max flow between s and t with capacities equal to edge multiplicities,
/// stopping once `cap` units have been routed.
std::size_t max_flow(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  std::vector<std::map<Vertex, long>> residual(n);
  for (Vertex u = 0; u < n; ++u) {
    for (const auto& [v, m] : g.neighbours(u)) residual[u][v] = static_cast<long>(m);
  }
  std::size_t flow = 0;
  std::vector<Vertex> parent(n);
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), n);
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty() && parent[t] == n) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const auto& [v, c] : residual[u]) {
        if (c > 0 && parent[v] == n) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] == n) break;
    long bottleneck = std::numeric_limits<long>::max();
    for (Vertex v = t; v != s; v = parent[v]) bottleneck = std::min(bottleneck, residual[parent[v]][v]);
    for (Vertex v = t; v != s; v = parent[v]) {
      residual[parent[v]][v] -= bottleneck;
      residual[v][parent[v]] += bottleneck;
    }
    flow += static_cast<std::size_t>(bottleneck);
  }
  return std::min(flow, cap);
}

}  // namespace

std::size_t edge_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw ParameterError("edge connectivity needs at least two vertices");
  if (!g.is_connected()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex u = 0; u < n; ++u) best = std::min(best, g.degree(u));
  for (Vertex t = 1; t < n; ++t) best = std::min(best, max_flow(g, 0, t, best));
  return best;
}

std::vector<EdgeCut> enumerate_cuts(const Graph& g, std::size_t max_size, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw ParameterError("cut enumeration needs at least two vertices");
  limit = std::min(limit, kHardEnumerationLimit);
  if (n > limit) {
    throw ScaleError("exhaustive cut enumeration is limited to " + std::to_string(limit) + " vertices (graph has " +
                     std::to_string(n) + "); use edge_connectivity instead");
  }
  // Vertex 0 stays in A; bit i-1 of the mask puts vertex i in B. Masks are
  // visited in Gray-code order so each step moves one vertex and the crossing
  // count is updated from that vertex's neighbourhood.
  std::vector<std::vector<std::pair<Vertex, long>>> nbrs(n);
  for (Vertex u = 0; u < n; ++u) {
    for (const auto& [v, m] : g.neighbours(u)) nbrs[u].emplace_back(v, static_cast<long>(m));
  }
  std::vector<bool> in_b(n, false);
  long crossing = 0;
  std::vector<std::uint64_t> hits;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    const Vertex moved = static_cast<Vertex>(std::countr_zero(step)) + 1;
    long same = 0;
    long other = 0;
    for (const auto& [v, m] : nbrs[moved]) (in_b[v] == in_b[moved] ? same : other) += m;
    crossing += same - other;
    in_b[moved] = !in_b[moved];
    if (crossing <= static_cast<long>(max_size)) hits.push_back(step ^ (step >> 1));
  }
  std::vector<EdgeCut> cuts;
  cuts.reserve(hits.size());
  for (std::uint64_t mask : hits) {
    std::vector<Vertex> a{0};
    for (Vertex v = 1; v < n; ++v) {
      if (!((mask >> (v - 1)) & 1U)) a.push_back(v);
    }
    cuts.push_back(make_cut(g, std::move(a)));
  }
  std::sort(cuts.begin(), cuts.end(), [](const EdgeCut& x, const EdgeCut& y) {
    if (x.side_a.size() != y.side_a.size()) return x.side_a.size() < y.side_a.size();
    return x.side_a < y.side_a;
  });
  return cuts;
}

std::vector<EdgeCut> minimum_cuts(const Graph& g, std::size_t limit) {
  if (!g.is_connected()) throw ConnectivityError("minimum cuts are enumerated on connected graphs");
  if (g.vertex_count() > std::min(limit, kHardEnumerationLimit)) {
    throw ScaleError("minimum-cut enumeration is limited to " + std::to_string(limit) +
                     " vertices; use edge_connectivity instead");
  }
  return enumerate_cuts(g, edge_connectivity(g), limit);
}

CutClassification classify_cut(const Graph& g, const EdgeCut& cut) {
  const EdgeCut expected = make_cut(g, cut.side_a);
  if (expected.side_b != cut.side_b) throw ParameterError("cut sides do not partition the vertex set");
  {
    auto key = [](const Edge& e) { return std::tuple(e.u, e.v, e.multiplicity); };
    std::vector<std::tuple<Vertex, Vertex, std::size_t>> got;
    std::vector<std::tuple<Vertex, Vertex, std::size_t>> want;
    for (const Edge& e : cut.crossing) got.push_back(key(e));
    for (const Edge& e : expected.crossing) want.push_back(key(e));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) throw ParameterError("crossing edge set does not match the cut sides");
  }

  CutClassification out;
  out.is_trivial = cut.is_trivial();
  // Cut graph G[C]: adjacency restricted to crossing edges.
  std::map<Vertex, std::map<Vertex, std::size_t>> adj;
  for (const Edge& e : expected.crossing) {
    adj[e.u][e.v] += e.multiplicity;
    adj[e.v][e.u] += e.multiplicity;
  }
  std::vector<bool> in_a(g.vertex_count(), false);
  for (Vertex v : cut.side_a) in_a[v] = true;
  for (const auto& [v, row] : adj) {
    std::size_t d = 0;
    for (const auto& [w, m] : row) d += m;
    out.cut_degree[v] = d;
    (in_a[v] ? out.a1_size : out.b1_size) += 1;
  }
  out.min_degree_in_cut_graph = 0;
  if (!out.cut_degree.empty()) {
    out.min_degree_in_cut_graph = std::min_element(out.cut_degree.begin(), out.cut_degree.end(), [](auto& l, auto& r) {
                                    return l.second < r.second;
                                  })->second;
  }

  // K2 component: two adjacent vertices joined by a single edge and nothing else.
  out.k2_component_free = true;
  for (const auto& [v, row] : adj) {
    if (row.size() == 1 && row.begin()->second == 1) {
      const Vertex w = row.begin()->first;
      if (adj.at(w).size() == 1) out.k2_component_free = false;
    }
  }

  const std::size_t c = expected.size();
  // Strongly S_x-free: a vertex u whose closed neighbourhood induces a star (all
  // cut edges at u simple, no cut edges among its neighbours) of order x with a
  // leaf of cut degree one.
  std::map<std::size_t, bool> sx;
  for (std::size_t x = 3; x <= c + 1; ++x) sx[x] = true;
  for (const auto& [u, row] : adj) {
    bool induced_star = true;
    bool has_unit_leaf = false;
    for (const auto& [w, m] : row) {
      if (m != 1) induced_star = false;
      for (const auto& [w2, m2] : row) {
        if (w != w2 && adj.at(w).count(w2)) induced_star = false;
      }
      if (out.cut_degree.at(w) == 1) has_unit_leaf = true;
    }
    const std::size_t order = row.size() + 1;
    if (induced_star && has_unit_leaf && sx.count(order)) sx[order] = false;
  }
  out.strongly_sx_free = std::move(sx);

  std::map<std::pair<std::size_t, std::size_t>, bool> sxy;
  for (std::size_t x = 1; x < c; ++x) {
    for (std::size_t y = 1; x + y <= c; ++y) sxy[{x, y}] = true;
  }
  for (const Edge& e : expected.crossing) {
    const std::size_t du = out.cut_degree.at(e.u);
    const std::size_t dv = out.cut_degree.at(e.v);
    if (du >= 2 && dv >= 2) {
      auto it = sxy.find({du - 1, dv - 1});
      if (it != sxy.end()) it->second = false;
    }
  }
  out.strongly_sxy_free = std::move(sxy);
  return out;
}

nlohmann::json to_json(const EdgeCut& cut) {
  nlohmann::json crossing = nlohmann::json::array();
  for (const Edge& e : cut.crossing) {
    nlohmann::json edge = {e.u, e.v};
    if (e.multiplicity != 1) edge.push_back(e.multiplicity);
    crossing.push_back(edge);
  }
  return {{"sideA", cut.side_a}, {"sideB", cut.side_b}, {"size", cut.size()}, {"trivial", cut.is_trivial()},
          {"crossing", crossing}};
}

nlohmann::json to_json(const CutClassification& c) {
  nlohmann::json sx = nlohmann::json::object();
  for (const auto& [x, free] : c.strongly_sx_free) sx[std::to_string(x)] = free;
  nlohmann::json sxy = nlohmann::json::object();
  for (const auto& [xy, free] : c.strongly_sxy_free) sxy[std::to_string(xy.first) + "," + std::to_string(xy.second)] = free;
  return {{"trivial", c.is_trivial},
          {"a1Size", c.a1_size},
          {"b1Size", c.b1_size},
          {"k2ComponentFree", c.k2_component_free},
          {"stronglySxFree", sx},
          {"stronglySxyFree", sxy},
          {"minDegreeInCutGraph", c.min_degree_in_cut_graph}};
}

}  // namespace equiarbor
