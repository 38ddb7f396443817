#include "equiarbor/generators.hpp"

#include <functional>

#include "equiarbor/errors.hpp"

namespace equiarbor {

Graph complete(std::size_t n) {
  if (n == 0) throw ParameterError("complete(n) needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw ParameterError("complete_bipartite(m,n) needs m, n >= 1");
  Graph g(m + n);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = m; v < m + n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ParameterError("cycle(n) needs n >= 3");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph star(std::size_t n) {
  if (n < 2) throw ParameterError("star(n) needs order n >= 2");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph double_star(std::size_t m, std::size_t n) {
  Graph g(m + n + 2);
  g.add_edge(0, 1);
  for (Vertex i = 0; i < m; ++i) g.add_edge(0, 2 + i);
  for (Vertex j = 0; j < n; ++j) g.add_edge(1, 2 + m + j);
  return g;
}

Graph hypercube(std::size_t d) {
  if (d == 0 || d > 20) throw ParameterError("hypercube(d) needs 1 <= d <= 20");
  const std::size_t n = std::size_t{1} << d;
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t bit = 0; bit < d; ++bit) {
      const Vertex v = u ^ (std::size_t{1} << bit);
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph triangular_prism() {
  Graph g(6);
  for (Vertex i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(i + 3, (i + 1) % 3 + 3);
    g.add_edge(i, i + 3);
  }
  return g;
}

Graph hamming(std::size_t d, std::size_t q) {
  if (d == 0 || q < 2) throw ParameterError("hamming(d,q) needs d >= 1 and q >= 2");
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= q;
    if (n > 4096) throw ParameterError("hamming(d,q) larger than 4096 vertices");
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    std::size_t place = 1;
    for (std::size_t pos = 0; pos < d; ++pos, place *= q) {
      const std::size_t digit = (u / place) % q;
      for (std::size_t other = digit + 1; other < q; ++other) g.add_edge(u, u + (other - digit) * place);
    }
  }
  return g;
}

Graph johnson(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw ParameterError("johnson(n,k) needs 1 <= k <= n");
  if (n > 24) throw ParameterError("johnson(n,k) needs n <= 24");
  // k-subsets as bit masks in lexicographic order of their sorted elements.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (current.size() == k) {
      subsets.push_back(current);
      return;
    }
    for (std::size_t e = start; e < n; ++e) {
      current.push_back(e);
      extend(e + 1);
      current.pop_back();
      if (subsets.size() > 4096) throw ParameterError("johnson(n,k) larger than 4096 vertices");
    }
  };
  extend(0);
  std::vector<unsigned long> masks;
  for (const auto& s : subsets) {
    unsigned long m = 0;
    for (auto e : s) m |= 1UL << e;
    masks.push_back(m);
  }
  Graph g(subsets.size());
  for (Vertex u = 0; u < masks.size(); ++u) {
    for (Vertex v = u + 1; v < masks.size(); ++v) {
      if (static_cast<std::size_t>(__builtin_popcountl(masks[u] & masks[v])) + 1 == k) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

std::size_t count_param(std::span<const long long> params, std::size_t i, std::string_view family) {
  if (params[i] < 0) throw ParameterError(std::string(family) + " parameters must be non-negative");
  return static_cast<std::size_t>(params[i]);
}

void expect_arity(std::span<const long long> params, std::size_t arity, std::string_view family) {
  if (params.size() != arity) {
    throw ParameterError(std::string(family) + " takes " + std::to_string(arity) + " parameter(s), got " +
                         std::to_string(params.size()));
  }
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"complete",  "complete_bipartite", "cycle",   "star",
                                              "double_star", "hypercube",        "petersen", "triangular_prism",
                                              "hamming",   "johnson"};
  return names;
}

Graph generate(std::string_view family, std::span<const long long> params) {
  auto p = [&](std::size_t i) { return count_param(params, i, family); };
  if (family == "complete") {
    expect_arity(params, 1, family);
    return complete(p(0));
  }
  if (family == "complete_bipartite") {
    expect_arity(params, 2, family);
    return complete_bipartite(p(0), p(1));
  }
  if (family == "cycle") {
    expect_arity(params, 1, family);
    return cycle(p(0));
  }
  if (family == "star") {
    expect_arity(params, 1, family);
    return star(p(0));
  }
  if (family == "double_star") {
    expect_arity(params, 2, family);
    return double_star(p(0), p(1));
  }
  if (family == "hypercube") {
    expect_arity(params, 1, family);
    return hypercube(p(0));
  }
  if (family == "petersen") {
    expect_arity(params, 0, family);
    return petersen();
  }
  if (family == "triangular_prism") {
    expect_arity(params, 0, family);
    return triangular_prism();
  }
  if (family == "hamming") {
    expect_arity(params, 2, family);
    return hamming(p(0), p(1));
  }
  if (family == "johnson") {
    expect_arity(params, 2, family);
    return johnson(p(0), p(1));
  }
  throw ParameterError("unknown graph family '" + std::string(family) + "'");
}

}  // namespace equiarbor
