// One line per acceptance criterion. All comparisons are exact; each criterion
// also has a wall-clock limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "equiarbor/bounds.hpp"
#include "equiarbor/catalog.hpp"
#include "equiarbor/cuts.hpp"
#include "equiarbor/equiarboreal.hpp"
#include "equiarbor/generators.hpp"
#include "equiarbor/matching.hpp"
#include "equiarbor/resistance.hpp"
#include "equiarbor/scheme.hpp"
#include "equiarbor/transform.hpp"
#include "oracles.hpp"

using namespace equiarbor;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

Rational q(long long p, long long d = 1) { return make_rational(p, d); }

std::vector<GraphCatalogEntry> catalog_graphs(bool include_controls) {
  std::vector<GraphCatalogEntry> out;
  for (const ManifestItem& item : default_catalog()) {
    if (item.negative_control && !include_controls) continue;
    out.push_back(load_entry(item));
  }
  return out;
}

Outcome constants() {
  struct Case {
    const char* label;
    WorkedNetwork id;
    ParamMap params;
    Rational expected;
  };
  const std::vector<Case> cases = {
      {"C4w", WorkedNetwork::C4w, {{"p", q(2, 3)}, {"q", q(2, 3)}}, q(7, 10)},
      {"C3w", WorkedNetwork::C3w, {{"s", q(8, 15)}, {"t", q(9, 20)}}, q(59, 119)},
      {"M2", WorkedNetwork::M2, {{"x2", q(1, 2)}, {"y2", q(1, 2)}}, q(5, 12)},
      {"M3", WorkedNetwork::M3, {{"x3", q(1, 3)}, {"y3", q(1, 4)}}, q(31, 75)},
      {"N2", WorkedNetwork::N2, {{"p", q(2, 5)}, {"q", q(1, 6)}}, q(5, 16)},
  };
  Outcome o;
  std::ostringstream d;
  for (const Case& c : cases) {
    const WeightedNetwork net = worked_network(c.id, c.params);
    const auto& t = *net.terminals();
    const Rational value = resistance(net, t[0], t[1]);
    const bool hit = value == c.expected && closed_form(c.id, c.params) == c.expected;
    o.ok = o.ok && hit;
    d << c.label << "=" << to_string(value) << (hit ? " " : "(want " + to_string(c.expected) + ") ");
  }
  o.detail = d.str();
  return o;
}

Outcome kirchhoff() {
  std::size_t points = 0, failures = 0;
  for (long k = 3; k <= 12; ++k) {
    for (const auto& [x, y] : f_domain(k)) {
      ++points;
      if (!kirchhoff_cross_check(k, x, y).ok()) ++failures;
    }
  }
  return {failures == 0 && points > 0, std::to_string(points) + " grid points, " + std::to_string(failures) + " mismatches"};
}

Outcome claim_grids() {
  std::size_t bad = 0;
  for (long k = 7; k <= 40; ++k)
    if (!verify_claim4(k) || !verify_appendix_b(k)) ++bad;
  return {bad == 0, "k = 7..40, " + std::to_string(bad) + " failing k"};
}

Outcome colour_classes() {
  const std::vector<std::pair<std::string, Graph>> schemes = {
      {"C5", cycle(5)},          {"C6", cycle(6)},          {"Petersen", petersen()}, {"H(2,2)", hamming(2, 2)},
      {"H(2,3)", hamming(2, 3)}, {"H(3,2)", hamming(3, 2)}, {"J(4,2)", johnson(4, 2)}, {"J(5,2)", johnson(5, 2)},
      {"Q3", hypercube(3)},      {"Q4", hypercube(4)}};
  Outcome o;
  std::size_t connected = 0, disconnected = 0;
  for (const auto& [name, g] : schemes) {
    const auto s = scheme_from_distance_partition(g);
    if (!s) {
      o.ok = false;
      o.detail += name + " is not a scheme; ";
      continue;
    }
    for (std::size_t i = 1; i <= s->class_count(); ++i) {
      const Graph c = colour_class(*s, i);
      if (!c.is_connected()) {
        ++disconnected;
        continue;
      }
      ++connected;
      const EquiarborealVerdict v = check_equiarboreal(c);
      const Rational formula(BigInt(static_cast<long>(c.vertex_count()) - 1), BigInt(static_cast<long>(c.edge_count())));
      if (!v.is_equiarboreal || *v.omega != formula) {
        o.ok = false;
        o.detail += name + " class " + std::to_string(i) + " fails; ";
      }
    }
  }
  o.detail += std::to_string(connected) + " connected classes equiarboreal with (n-1)/m, " +
              std::to_string(disconnected) + " disconnected classes not in scope";
  return o;
}

Outcome connectivity() {
  Outcome o;
  std::size_t checked = 0, enumerated = 0;
  for (const GraphCatalogEntry& e : catalog_graphs(false)) {
    const Graph& g = e.graph;
    const auto k = g.regularity();
    if (!k || !g.is_connected() || !check_equiarboreal(g).is_equiarboreal) continue;
    ++checked;
    if (edge_connectivity(g) != *k) {
      o.ok = false;
      o.detail += e.name + " has lambda != k; ";
    }
    if (g.vertex_count() <= 20 && *k >= 1) {
      ++enumerated;
      for (const EdgeCut& c : enumerate_cuts(g, *k - 1, 20)) {
        if (!c.is_trivial()) {
          o.ok = false;
          o.detail += e.name + " has a non-trivial cut below k; ";
          break;
        }
      }
    }
  }
  const auto cuts = minimum_cuts(petersen());
  bool stars = cuts.size() == 10;
  for (const EdgeCut& c : cuts) stars = stars && c.is_trivial() && c.size() == 3;
  o.ok = o.ok && stars;
  o.detail += std::to_string(checked) + " graphs with lambda = k, " + std::to_string(enumerated) +
              " enumerated, Petersen min cuts: " + std::to_string(cuts.size()) + (stars ? " stars" : " NOT all stars");
  return o;
}

Outcome negative_control() {
  const Graph g = triangular_prism();
  const EquiarborealVerdict v = check_equiarboreal(g);
  const SchemeVerification s = verify_scheme(distance_relation(g));
  const bool ok = !v.is_equiarboreal && v.witness && !s.valid && s.violation && s.violation->axiom == "iv";
  std::ostringstream d;
  if (v.witness) {
    d << "edges " << v.witness->first.u << "-" << v.witness->first.v << " (" << to_string(v.witness->first_resistance)
      << ") vs " << v.witness->second.u << "-" << v.witness->second.v << " (" << to_string(v.witness->second_resistance)
      << ")";
  }
  if (s.violation) {
    d << "; axiom " << s.violation->axiom << " at i=" << s.violation->i << " j=" << s.violation->j << " pair ("
      << s.violation->x << "," << s.violation->y << ")";
  }
  return {ok, d.str()};
}

Outcome transformations() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<Vertex> terminals;
      for (Vertex v = 0; v < m + n; ++v) terminals.push_back(v);
      ++pairs;
      if (!s_equivalent(WeightedNetwork::from_graph(complete_bipartite(m, n)), bipartite_to_double_star(m, n).network,
                        terminals)
               .equivalent) {
        o.ok = false;
        o.detail += "K" + std::to_string(m) + "," + std::to_string(n) + " differs; ";
      }
    }
  }
  std::mt19937 rng(2024);
  std::size_t hosts = 0;
  while (hosts < 20) {
    const std::size_t m = 1 + hosts % 3, n = 1 + (hosts / 3) % 3, total = m + n + 2 + hosts % 4;
    const Graph base = oracle::random_connected_graph(rng, total, 0.25);
    Graph g(total);
    for (const Edge& e : base.edges()) {
      const bool cross = (e.u < m && e.v >= m && e.v < m + n);
      if (!cross) g.add_edge(e.u, e.v, e.multiplicity);
    }
    for (Vertex a = 0; a < m; ++a)
      for (Vertex b = m; b < m + n; ++b) g.add_edge(a, b);
    if (!g.is_connected()) continue;
    ++hosts;
    std::vector<Vertex> pa, pb, all;
    for (Vertex v = 0; v < total; ++v) all.push_back(v);
    for (Vertex a = 0; a < m; ++a) pa.push_back(a);
    for (Vertex b = m; b < m + n; ++b) pb.push_back(b);
    const WeightedNetwork net = WeightedNetwork::from_graph(g);
    if (!s_equivalent(net, substitute_bipartite(net, pa, pb).network, all).equivalent) {
      o.ok = false;
      o.detail += "host " + std::to_string(hosts) + " changed; ";
    }
  }
  o.detail += std::to_string(pairs) + " (m,n) pairs, " + std::to_string(hosts) + " random hosts";
  return o;
}

Outcome properties() {
  std::size_t foster = 0, edges = 0, violations = 0;
  for (const GraphCatalogEntry& e : catalog_graphs(true)) {
    const Graph& g = e.graph;
    if (!g.is_connected()) continue;
    ++foster;
    if (foster_sum(g) != static_cast<long>(g.vertex_count()) - 1) ++violations;
    for (const Edge& edge : g.edges()) {
      ++edges;
      if (tree_ratio_resistance(g, edge.u, edge.v).value != resistance(g, edge.u, edge.v)) ++violations;
    }
  }
  std::mt19937 rng(77);
  for (int t = 0; t < 200; ++t) {
    // Rayleigh
    WeightedNetwork net = oracle::random_network(rng, 3 + t % 6, 0.4);
    const RationalMatrix before = resistance_matrix(net);
    const auto b = net.branches()[static_cast<std::size_t>(t) % net.branches().size()];
    const Rational old_r = Rational(1) / b.conductance;
    net.remove_pair(b.u, b.v);
    net.add_resistor(b.u, b.v, old_r + oracle::random_positive(rng));
    const RationalMatrix after = resistance_matrix(net);
    for (Eigen::Index i = 0; i < before.rows(); ++i)
      for (Eigen::Index j = 0; j < before.cols(); ++j)
        if (after(i, j) < before(i, j)) ++violations;
  }
  for (int t = 0; t < 200; ++t) {
    // identification
    const WeightedNetwork net = oracle::random_network(rng, 4 + t % 6, 0.3);
    const Vertex i = static_cast<Vertex>(t) % net.vertex_count();
    const Vertex j = (i + 1 + static_cast<Vertex>(t / 7) % (net.vertex_count() - 1)) % net.vertex_count();
    const NetworkQuotient qn = identify_vertices(net, {{i, j}});
    for (Vertex u = 0; u < net.vertex_count(); ++u)
      for (Vertex v = u + 1; v < net.vertex_count(); ++v)
        if (qn.vertex_map[u] != qn.vertex_map[v] &&
            resistance(qn.network, qn.vertex_map[u], qn.vertex_map[v]) > resistance(net, u, v))
          ++violations;
  }
  for (int t = 0; t < 200; ++t) {
    // inverse incident conductance
    const WeightedNetwork net = oracle::random_network(rng, 3 + t % 7, 0.35);
    const RationalMatrix r = resistance_matrix(net);
    for (Vertex u = 0; u < net.vertex_count(); ++u)
      for (Vertex v = u + 1; v < net.vertex_count(); ++v)
        if (r(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) <
            std::max(Rational(1) / w_sum(net, u), Rational(1) / w_sum(net, v)))
          ++violations;
  }
  for (int t = 0; t < 200; ++t) {
    // degree bounds
    const Graph g = oracle::random_connected_graph(rng, 3 + t % 8, 0.3);
    const RationalMatrix r = resistance_matrix(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
        const long long du = static_cast<long long>(g.degree(u)), dv = static_cast<long long>(g.degree(v));
        const Rational bound = g.adjacent(u, v) ? q(1, du + 1) + q(1, dv + 1) : q(1, du) + q(1, dv);
        if (r(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) < bound) ++violations;
      }
  }
  return {violations == 0, std::to_string(foster) + " Foster sums, " + std::to_string(edges) +
                               " catalog edges, 4 x 200 random instances, " + std::to_string(violations) + " violations"};
}

Outcome matchings() {
  Outcome o;
  std::size_t checked = 0;
  for (const GraphCatalogEntry& e : catalog_graphs(false)) {
    const Graph& g = e.graph;
    if (g.vertex_count() % 2 || !g.regularity() || !g.is_connected() || !check_equiarboreal(g).is_equiarboreal) continue;
    ++checked;
    const MatchingResult r = has_perfect_matching(g);
    if (!r.has_perfect || !r.matching || !is_perfect_matching(g, *r.matching)) {
      o.ok = false;
      o.detail += e.name + " has no verified perfect matching; ";
    }
  }
  o.detail += std::to_string(checked) + " even-order graphs matched and cover-checked";
  return o;
}

}  // namespace

int main() {
  struct Row {
    const char* id;
    double limit_seconds;
    Criterion run;
  };
  const std::vector<Row> rows = {
      {"AC1", 1.0, constants},       {"AC2", 10.0, kirchhoff},      {"AC3", 10.0, claim_grids},
      {"AC4", 30.0, colour_classes}, {"AC5", 60.0, connectivity},   {"AC6", 60.0, negative_control},
      {"AC7", 60.0, transformations}, {"AC8", 120.0, properties},   {"AC9", 60.0, matchings},
  };
  int failures = 0;
  for (const Row& row : rows) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = row.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= row.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %s  %.3f s (limit %.0f s, exact)  %s%s\n", row.id, pass ? "PASS" : "FAIL", secs, row.limit_seconds,
                o.detail.c_str(), in_time ? "" : " [over time limit]");
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
