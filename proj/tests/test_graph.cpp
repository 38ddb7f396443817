#include <doctest.h>

#include <random>

#include "equiarbor/errors.hpp"
#include "equiarbor/generators.hpp"
#include "equiarbor/graph.hpp"
#include "equiarbor/resistance.hpp"
#include "oracles.hpp"

using namespace equiarbor;

namespace {

// graph6 strings produced by networkx on the same labelled graphs
constexpr const char* kPetersen6 = "IheA@GUAo";
constexpr const char* kQ36 = "Gr`HOk";
constexpr const char* kPrism6 = "E{Sw";
constexpr const char* kH236 = "H{S{aSf";
constexpr const char* kC56 = "Dhc";

std::size_t degree_sum(const Graph& g) {
  std::size_t s = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s += g.degree(v);
  return s;
}

std::vector<Graph> family_samples() {
  return {complete(1),      complete(6),        complete_bipartite(2, 5), cycle(3),   cycle(9),
          star(2),          star(7),            double_star(1, 4),        hypercube(1), hypercube(4),
          petersen(),       triangular_prism(), hamming(3, 3),            hamming(2, 4), johnson(6, 3),
          johnson(4, 1)};
}

}  // namespace

TEST_CASE("graph6 decoding") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4 == complete(4));
  const Graph one = parse_graph6("@");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(parse_graph6(">>graph6<<C~\n") == k4);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);      // truncated bit vector
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);    // too long
}

TEST_CASE("graph6 matches an independent codec") {
  CHECK(to_graph6(petersen()) == kPetersen6);
  CHECK(to_graph6(hypercube(3)) == kQ36);
  CHECK(to_graph6(triangular_prism()) == kPrism6);
  CHECK(to_graph6(hamming(2, 3)) == kH236);
  CHECK(to_graph6(cycle(5)) == kC56);
  for (const char* s : {kPetersen6, kQ36, kPrism6, kH236, kC56, "C~", "@"}) CHECK(to_graph6(parse_graph6(s)) == s);
  // 70 vertices uses the long order header
  const Graph c70 = cycle(70);
  const std::string s = to_graph6(c70);
  CHECK(s.substr(0, 4) == "~?@E");
  CHECK(parse_graph6(s) == c70);
  CHECK_THROWS_AS(to_graph6(parse_edge_list("2 2\n0 1\n0 1\n")), ParameterError);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  try {
    parse_graph6("C~\x01");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() >= 2);
  }
}

TEST_CASE("generator examples") {
  const Graph p = petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.regularity() == 3u);
  const Graph h = hamming(2, 3);
  CHECK(h.vertex_count() == 9);
  CHECK(h.regularity() == 4u);
  // Hamming distance one, recomputed from digits
  for (Vertex a = 0; a < 9; ++a)
    for (Vertex b = 0; b < 9; ++b)
      if (a != b) CHECK(h.adjacent(a, b) == (((a / 3 == b / 3) + (a % 3 == b % 3)) == 1));
  const Graph c = cycle(5);
  CHECK(c.vertex_count() == 5);
  CHECK(c.edge_count() == 5);
  CHECK(c.regularity() == 2u);
  CHECK(johnson(5, 2).regularity() == 6u);
  CHECK(johnson(5, 2).vertex_count() == 10);
  CHECK(hypercube(4).regularity() == 4u);
  CHECK(double_star(2, 3).vertex_count() == 7);
  CHECK(star(5).degree(0) == 4);
}

TEST_CASE("generator parameter errors") {
  const long long bad_johnson[] = {3, 5};
  CHECK_THROWS_AS(generate("johnson", bad_johnson), ParameterError);
  CHECK_THROWS_AS(generate("nonsense", {}), ParameterError);
  const long long one[] = {4};
  CHECK_THROWS_AS(generate("complete_bipartite", one), ParameterError);
  CHECK_THROWS_AS(generate("petersen", one), ParameterError);
  const long long neg[] = {-2};
  CHECK_THROWS_AS(generate("cycle", neg), ParameterError);
  const long long c2[] = {2};
  CHECK_THROWS_AS(generate("cycle", c2), ParameterError);
  const long long k3[] = {3};
  CHECK(generate("cycle", k3) == cycle(3));
  CHECK(family_names().size() == 10);
}

TEST_CASE("handshake identity on generated and parsed graphs") {
  for (const Graph& g : family_samples()) {
    CHECK(degree_sum(g) == 2 * g.edge_count());
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    if (g.vertex_count() > 0) CHECK(parse_graph6(to_graph6(g)) == g);
  }
  const Graph multi = parse_edge_list("# doubled triangle\n3 6\n0 1\n1 2\n2 0\n0 1\n1 2\n2 0\n");
  CHECK(multi.edge_count() == 6);
  CHECK(multi.multiplicity(0, 1) == 2);
  CHECK(degree_sum(multi) == 12);
  CHECK(!multi.is_simple());
}

TEST_CASE("distances agree with Floyd-Warshall") {
  std::mt19937 rng(2);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 3 + t % 9, 0.2);
    CHECK(distance_matrix(g) == oracle::floyd_warshall(g));
  }
  for (const Graph& g : family_samples()) CHECK(distance_matrix(g) == oracle::floyd_warshall(g));
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK(distance_matrix(split)[0][2] == -1);
}

TEST_CASE("edge list parse errors") {
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  CHECK(parse_graph_text("C~") == complete(4));
  CHECK(parse_graph_text("2 1\n0 1\n") == complete(2));
}

TEST_CASE("identify_vertices examples") {
  const Quotient k3 = identify_vertices(complete(3), {{0, 1}});
  CHECK(k3.graph.vertex_count() == 2);
  CHECK(k3.graph.multiplicity(0, 1) == 2);
  CHECK(k3.graph.edge_count() == 2);

  const Quotient c4 = identify_vertices(cycle(4), {{0, 2}});
  CHECK(c4.graph.vertex_count() == 3);
  CHECK(c4.graph.edge_count() == 4);
  const BigInt tau_c4 = spanning_tree_count(c4.graph);
  CHECK(tau_c4 == oracle::tree_count_dc(3, oracle::edge_copies(c4.graph)));
  CHECK(tau_c4 == 4);
  // tau(G_uv)/tau(G) is Omega(0,2) = 1 in C4
  CHECK(Rational(tau_c4, spanning_tree_count(cycle(4))) == 1);

  const Quotient pe = identify_vertices(petersen(), {{0, 1}});
  CHECK(pe.graph.vertex_count() == 9);
  CHECK(pe.graph.edge_count() == 14);
  CHECK(Rational(spanning_tree_count(pe.graph), spanning_tree_count(petersen())) == make_rational(3, 5));

  CHECK_THROWS_AS(identify_vertices(cycle(5), {{0, 1}, {1, 2}}), ParameterError);
  CHECK_THROWS_AS(identify_vertices(cycle(5), {{}}), ParameterError);
}

TEST_CASE("identification keeps edges minus deleted loops") {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 6 + t % 5, 0.3);
    std::vector<Vertex> group = {0, static_cast<Vertex>(1 + t % (g.vertex_count() - 1))};
    const Quotient q = identify_vertices(g, {group});
    const std::size_t loops = g.multiplicity(group[0], group[1]);
    CHECK(q.graph.edge_count() == g.edge_count() - loops);
    CHECK(q.vertex_map[group[0]] == q.vertex_map[group[1]]);
  }
}
