#include "equiarbor/matching.hpp"

#include <algorithm>
#include <deque>

namespace equiarbor {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Edmonds' algorithm: BFS from each exposed vertex, contracting odd cycles
// (blossoms) by relabelling their vertices with a common base.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(g.vertex_count()), match_(n_, kNone) {}

  Matching run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] == kNone) augment_from(v);
    }
    Matching out;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone && v < match_[v]) out.emplace_back(v, match_[v]);
    }
    return out;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child, std::vector<bool>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = in_blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void augment_from(Vertex root) {
    parent_.assign(n_, kNone);
    base_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    std::vector<bool> used(n_, false);
    used[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const auto& [to, mult] : g_.neighbours(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const Vertex b = lca(v, to);
          std::vector<bool> in_blossom(n_, false);
          mark_path(v, b, to, in_blossom);
          mark_path(to, b, v, in_blossom);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = b;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) {
            flip(to);
            return;
          }
          used[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
  }

  void flip(Vertex v) {
    while (v != kNone) {
      const Vertex pv = parent_[v];
      const Vertex next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

bool is_perfect_matching(const Graph& g, const Matching& m) {
  std::vector<int> cover(g.vertex_count(), 0);
  for (const auto& [u, v] : m) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) return false;
    ++cover[u];
    ++cover[v];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

MatchingResult has_perfect_matching(const Graph& g) {
  MatchingResult out;
  if (g.vertex_count() % 2 != 0) return out;
  Matching m = maximum_matching(g);
  if (2 * m.size() == g.vertex_count() && is_perfect_matching(g, m)) {
    out.has_perfect = true;
    out.matching = std::move(m);
  }
  return out;
}

nlohmann::json to_json(const MatchingResult& r) {
  nlohmann::json doc = {{"hasPerfectMatching", r.has_perfect}};
  if (r.matching) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [u, v] : *r.matching) pairs.push_back({u, v});
    doc["matching"] = pairs;
  } else {
    doc["matching"] = nullptr;
  }
  return doc;
}

}  // namespace equiarbor
