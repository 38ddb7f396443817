#include <doctest.h>

#include <random>

#include "equiarbor/errors.hpp"
#include "equiarbor/generators.hpp"
#include "equiarbor/resistance.hpp"
#include "oracles.hpp"

using namespace equiarbor;

namespace {

Rational q(long long p, long long d = 1) { return make_rational(p, d); }

std::vector<Graph> unweighted_samples() {
  return {complete(4), complete(6),  cycle(5),      cycle(8),      petersen(),
          hypercube(3), hamming(2, 3), johnson(5, 2), complete_bipartite(2, 3), triangular_prism(),
          star(5),     double_star(2, 2)};
}

}  // namespace

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(cycle(5)) == 5);
  CHECK(spanning_tree_count(complete(4)) == 16);
  for (std::size_t n = 2; n <= 7; ++n) {
    BigInt cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= static_cast<long>(n);
    CHECK(spanning_tree_count(complete(n)) == cayley);
  }
  const Graph p = petersen();
  CHECK(spanning_tree_count(p) == oracle::tree_count_dc(10, oracle::edge_copies(p)));
  CHECK(spanning_tree_count(p) == 2000);
  CHECK(spanning_tree_count(Graph(1)) == 1);
  CHECK(spanning_tree_count(Graph(3)) == 0);
  Graph multi(2);
  multi.add_edge(0, 1, 3);
  CHECK(spanning_tree_count(multi) == 3);
}

TEST_CASE("cycle edge resistance") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph c = cycle(n);
    CHECK(resistance(c, 0, 1) == q(static_cast<long long>(n) - 1, static_cast<long long>(n)));
  }
}

TEST_CASE("resistance of the M3 network") {
  // u1=0 u2=1 v1=2 v2=3
  WeightedNetwork m3(4);
  m3.add_resistor(0, 1, q(1, 3));
  m3.add_resistor(2, 3, q(1, 4));
  m3.add_resistor(0, 2, q(1));
  m3.add_resistor(0, 3, q(1));
  m3.add_resistor(1, 3, q(1, 2));
  CHECK(resistance(m3, 0, 2) == q(31, 75));
}

TEST_CASE("resistance of the N2 network with a negative centre edge") {
  // u1=0 u2=1 v1..v3=2..4 u0=5 v0=6 o=7
  WeightedNetwork n2(8);
  n2.add_resistor(0, 1, q(2, 5));
  n2.add_resistor(0, 5, q(1, 3));
  n2.add_resistor(1, 5, q(1, 3));
  for (Vertex v = 2; v <= 4; ++v) {
    n2.add_resistor(v, 6, q(1, 2));
    n2.add_resistor(v, 7, q(1, 6));
  }
  n2.add_resistor(5, 6, q(-1, 6));
  CHECK(resistance(n2, 0, 2) == q(11, 48) - q(1, 6) + q(1, 4));
  CHECK(resistance(n2, 0, 2) == q(5, 16));
}

TEST_CASE("resistance errors") {
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(resistance(split, 0, 2), InfiniteResistanceError);
  CHECK_THROWS_AS(resistance(cycle(4), 1, 1), ParameterError);
  // grounded system [[2,-1],[-1,1/2]] has determinant 0
  WeightedNetwork bad(3);
  bad.add_conductance(0, 1, q(1));
  bad.add_conductance(0, 2, q(1));
  bad.add_conductance(1, 2, q(-1, 2));
  CHECK_THROWS_AS(resistance(bad, 0, 2), SingularNetworkError);
  CHECK_THROWS_AS(foster_sum(split), ConnectivityError);
  CHECK_THROWS_AS(w_sum(WeightedNetwork(2), 0), ParameterError);
}

TEST_CASE("Foster sums") {
  CHECK(foster_sum(complete(4)) == 3);
  CHECK(foster_sum(petersen()) == 9);
  CHECK(foster_sum(cycle(6)) == 5);
  for (const Graph& g : unweighted_samples())
    CHECK(foster_sum(g) == static_cast<long>(g.vertex_count()) - 1);
}

TEST_CASE("w_sum") {
  CHECK(w_sum(WeightedNetwork::from_graph(star(5)), 0) == 4);
  WeightedNetwork net(4);
  net.add_resistor(0, 1, q(1, 3));
  net.add_resistor(0, 2, q(1, 3));
  net.add_resistor(0, 3, q(2, 5));
  CHECK(w_sum(net, 0) == q(17, 2));
  // A-side of the reduced cut network: u1 keeps k-x edges to the rest of A
  for (long k = 5; k <= 9; ++k) {
    for (long x = 1; x < k; ++x) {
      WeightedNetwork side(2);
      side.add_conductance(0, 1, q(k - x));
      CHECK(w_sum(side, 0) == k - x);
    }
  }
}

TEST_CASE("resistance matches an independent nodal solve and the tree ratio") {
  for (const Graph& g : unweighted_samples()) {
    const RationalMatrix r = resistance_matrix(g);
    const BigInt tau = spanning_tree_count(g);
    for (const Edge& e : g.edges()) {
      const Rational direct = resistance(g, e.u, e.v);
      CHECK(direct == oracle::resistance(g, e.u, e.v));
      CHECK(direct == tree_ratio_resistance(g, e.u, e.v).value);
      const BigInt merged = spanning_tree_count(identify_vertices(g, {{e.u, e.v}}).graph);
      CHECK(direct == Rational(merged, tau));
      CHECK(r(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) == direct);
    }
  }
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    const WeightedNetwork net = oracle::random_network(rng, 3 + t % 7, 0.35);
    for (Vertex u = 0; u < net.vertex_count(); ++u)
      for (Vertex v = u + 1; v < net.vertex_count(); ++v) CHECK(resistance(net, u, v) == oracle::resistance(net, u, v));
  }
}

TEST_CASE("symmetry and triangle inequality") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    const WeightedNetwork net = oracle::random_network(rng, 3 + t % 6, 0.4);
    const RationalMatrix r = resistance_matrix(net);
    const auto n = static_cast<Eigen::Index>(net.vertex_count());
    for (Eigen::Index a = 0; a < n; ++a) {
      CHECK(r(a, a) == 0);
      for (Eigen::Index b = 0; b < n; ++b) {
        CHECK(r(a, b) == r(b, a));
        if (a != b) CHECK(r(a, b) > 0);
        for (Eigen::Index c = 0; c < n; ++c) CHECK(r(a, c) <= r(a, b) + r(b, c));
      }
    }
    CHECK(resistance(net, 0, 1) == resistance(net, 1, 0));
  }
}

TEST_CASE("Rayleigh monotonicity") {
  std::mt19937 rng(6);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    WeightedNetwork net = oracle::random_network(rng, 3 + t % 6, 0.4);
    const RationalMatrix before = resistance_matrix(net);
    const auto branches = net.branches();
    const auto& b = branches[static_cast<std::size_t>(t) % branches.size()];
    const Rational r_old = Rational(1) / b.conductance;
    net.remove_pair(b.u, b.v);
    net.add_resistor(b.u, b.v, r_old + oracle::random_positive(rng));
    const RationalMatrix after = resistance_matrix(net);
    for (Eigen::Index i = 0; i < before.rows(); ++i)
      for (Eigen::Index j = 0; j < before.cols(); ++j)
        if (after(i, j) < before(i, j)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("identifying vertices never increases resistance") {
  std::mt19937 rng(7);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    const WeightedNetwork net = oracle::random_network(rng, 4 + t % 6, 0.3);
    const std::size_t n = net.vertex_count();
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    Vertex i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    const NetworkQuotient qn = identify_vertices(net, {{i, j}});
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (qn.vertex_map[u] == qn.vertex_map[v]) continue;
        if (resistance(qn.network, qn.vertex_map[u], qn.vertex_map[v]) > resistance(net, u, v)) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("resistance is at least the larger inverse incident conductance") {
  std::mt19937 rng(8);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    const WeightedNetwork net = oracle::random_network(rng, 3 + t % 7, 0.35);
    const RationalMatrix r = resistance_matrix(net);
    for (Vertex u = 0; u < net.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < net.vertex_count(); ++v) {
        const Rational bound = std::max(Rational(1) / w_sum(net, u), Rational(1) / w_sum(net, v));
        if (r(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) < bound) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("degree lower bounds on unweighted graphs") {
  std::mt19937 rng(9);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 3 + t % 8, 0.3);
    const RationalMatrix r = resistance_matrix(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
        const long du = static_cast<long>(g.degree(u));
        const long dv = static_cast<long>(g.degree(v));
        const Rational bound = g.adjacent(u, v) ? q(1, du + 1) + q(1, dv + 1) : q(1, du) + q(1, dv);
        if (r(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) < bound) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("unit current potentials") {
  const UnitCurrentSolution s = unit_current_potentials(WeightedNetwork::from_graph(cycle(4)), 0, 2);
  CHECK(s.resistance == 1);
  CHECK(s.potential(0) == 1);
  CHECK(s.potential(1) == q(1, 2));
  CHECK(s.potential(2) == 0);
}
