#include "equiarbor/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

#include "equiarbor/errors.hpp"

namespace equiarbor {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

void Graph::check_vertex(Vertex u) const {
  if (u >= adjacency_.size()) {
    throw ParameterError("vertex " + std::to_string(u) + " out of range for graph on " +
                         std::to_string(adjacency_.size()) + " vertices");
  }
}

void Graph::add_edge(Vertex u, Vertex v, std::size_t multiplicity) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
  if (multiplicity == 0) return;
  adjacency_[u][v] += multiplicity;
  adjacency_[v][u] += multiplicity;
  edge_count_ += multiplicity;
}

std::size_t Graph::pair_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

std::size_t Graph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = adjacency_[u].find(v);
  return it == adjacency_[u].end() ? 0 : it->second;
}

std::size_t Graph::degree(Vertex u) const {
  check_vertex(u);
  std::size_t d = 0;
  for (const auto& [v, m] : adjacency_[u]) d += m;
  return d;
}

const std::map<Vertex, std::size_t>& Graph::neighbours(Vertex u) const {
  check_vertex(u);
  return adjacency_[u];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (auto it = adjacency_[u].upper_bound(u); it != adjacency_[u].end(); ++it) {
      out.push_back({u, it->first, it->second});
    }
  }
  return out;
}

bool Graph::is_simple() const {
  for (const auto& row : adjacency_) {
    for (const auto& [v, m] : row) {
      if (m != 1) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  const std::size_t n = adjacency_.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& [v, m] : adjacency_[comp[head]]) {
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

bool Graph::is_connected() const { return adjacency_.empty() || components().size() == 1; }

std::optional<std::size_t> Graph::regularity() const {
  if (adjacency_.empty()) return std::nullopt;
  const std::size_t d = degree(0);
  for (Vertex u = 1; u < adjacency_.size(); ++u) {
    if (degree(u) != d) return std::nullopt;
  }
  return d;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  std::map<Vertex, Vertex> label;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    if (!label.emplace(vertices[i], i).second) {
      throw ParameterError("duplicate vertex " + std::to_string(vertices[i]) + " in induced()");
    }
  }
  Graph h(vertices.size());
  for (const auto& [old_u, new_u] : label) {
    for (const auto& [old_v, m] : adjacency_[old_u]) {
      auto it = label.find(old_v);
      if (it != label.end() && new_u < it->second) h.add_edge(new_u, it->second, m);
    }
  }
  return h;
}

Quotient identify_vertices(const Graph& g, const std::vector<std::vector<Vertex>>& groups) {
  const std::size_t n = g.vertex_count();
  // Representative (smallest member) of every vertex's class.
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
  std::vector<Vertex> label_of_rep(n, 0);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (rep[v] == v) label_of_rep[v] = next++;
  }
  Quotient q{Graph(next), std::vector<Vertex>(n)};
  for (Vertex v = 0; v < n; ++v) q.vertex_map[v] = label_of_rep[rep[v]];
  for (const Edge& e : g.edges()) {
    const Vertex a = q.vertex_map[e.u];
    const Vertex b = q.vertex_map[e.v];
    if (a != b) q.graph.add_edge(a, b, e.multiplicity);
  }
  return q;
}

std::vector<std::vector<long>> distance_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const auto& [v, m] : g.neighbours(u)) {
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

// graph6 -------------------------------------------------------------------

namespace {

constexpr std::size_t kGraph6MaxOrder = 258047;
constexpr std::string_view kGraph6Header = ">>graph6<<";

int graph6_value(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 input truncated", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 line", pos);

  std::size_t n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("graph6 orders above 258047 are not supported", pos);
    }
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(graph6_value(text, pos++));
    if (n < 63) throw ParseError("non-canonical graph6 order header", pos - 4);
  } else {
    n = static_cast<std::size_t>(graph6_value(text, pos++));
  }
  if (n > kGraph6MaxOrder) throw ParseError("graph6 order too large", pos);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 bit vector has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  }
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = graph6_value(text, pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bytes > 0) {
    const int last = graph6_value(text, pos + bytes - 1);
    const std::size_t used = bits - (bytes - 1) * 6;
    if ((last & ((1 << (6 - used)) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", pos + bytes - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw ParameterError("graph6 cannot encode parallel edges");
  const std::size_t n = g.vertex_count();
  if (n > kGraph6MaxOrder) throw ParameterError("graph6 order limit exceeded");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// Edge list ----------------------------------------------------------------

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size()) {
      if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos >= text.size();
  }

  std::size_t number(const char* what) {
    skip();
    std::size_t value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError(std::string("expected ") + what, pos);
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
  }
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokenizer tok{text};
  const std::size_t n = tok.number("vertex count");
  const std::size_t m = tok.number("edge count");
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t at = (tok.skip(), tok.pos);
    const std::size_t u = tok.number("edge endpoint");
    const std::size_t v = tok.number("edge endpoint");
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
    if (u == v) throw ParseError("loop in edge list", at);
    g.add_edge(u, v);
  }
  if (!tok.done()) throw ParseError("more edges than the header declares", tok.pos);
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.multiplicity; ++i) out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

Graph parse_graph_text(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '#')) {
    return parse_edge_list(text);
  }
  std::string_view line = text.substr(pos);
  line = line.substr(0, line.find_first_of("\r\n"));
  return parse_graph6(line);
}

}  // namespace equiarbor
