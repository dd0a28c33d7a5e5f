#pragma once

#include <vector>

#include "flexrig/graph.hpp"

namespace flexrig {

namespace detail {

// (2,3) pebble game. Accepted edges are kept as directed out-edges of the
// vertex whose pebble covers them.
class PebbleGame {
 public:
  explicit PebbleGame(int n) : pebbles_(static_cast<std::size_t>(n), 2), out_(static_cast<std::size_t>(n)) {}

  bool try_insert(int u, int v) {
    while (pebbles_[u] < 2) {
      if (!fetch(u, v)) return false;
    }
    while (pebbles_[v] < 2) {
      if (!fetch(v, u)) return false;
    }
    // Four pebbles on {u,v}: the edge is independent.
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // Moves one free pebble to `root` along reversed out-edges; `keep` is not
  // allowed to give up its pebbles.
  bool fetch(int root, int keep) {
    const auto n = pebbles_.size();
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    seen[keep] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : out_[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        parent[y] = x;
        if (pebbles_[y] > 0) {
          --pebbles_[y];
          for (int w = y; w != root; w = parent[w]) reverse(parent[w], w);
          ++pebbles_[root];
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  }

  void reverse(int from, int to) {
    auto& edges = out_[from];
    for (auto it = edges.begin(); it != edges.end(); ++it) {
      if (*it == to) {
        edges.erase(it);
        break;
      }
    }
    out_[to].push_back(from);
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

}  // namespace detail

// Rank of the edge set in the generic 2D rigidity matroid.
inline int spanning_laman_rank(const Graph& g) {
  detail::PebbleGame game(g.n());
  int rank = 0;
  for (const Edge& e : g.edges()) {
    if (game.try_insert(e.u, e.v)) ++rank;
  }
  return rank;
}

inline bool has_spanning_laman_subgraph(const Graph& g) {
  if (g.n() < 2) return false;
  return spanning_laman_rank(g) == 2 * g.n() - 3;
}

inline bool is_laman(const Graph& g) {
  if (g.n() < 2) return false;
  const int target = 2 * g.n() - 3;
  return static_cast<int>(g.num_edges()) == target && spanning_laman_rank(g) == target;
}

}  // namespace flexrig
