#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flexrig/errors.hpp"

namespace flexrig {

// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
  constexpr bool incident(int w) const { return u == w || v == w; }
  constexpr int other(int w) const { return w == u ? v : u; }
};

using VertexMask = std::uint64_t;

constexpr int kMaxVertices = 64;

// Simple undirected graph on vertices 0..n-1 with a lexicographically sorted
// edge list. Edge indices refer to positions in that list.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) {
      throw PreconditionError("vertex count out of range: " + std::to_string(n));
    }
  }

  Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) {
        throw PreconditionError("edge endpoint out of range");
      }
      if (e.u == e.v) {
        throw PreconditionError("loops are not allowed");
      }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw PreconditionError("duplicate edge");
    }
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
      adj_[e.u] |= VertexMask{1} << e.v;
      adj_[e.v] |= VertexMask{1} << e.u;
    }
  }

  static Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
  }

  int n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  VertexMask neighbor_mask(int v) const { return adj_[v]; }
  VertexMask all_vertices() const {
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
  }

  bool has_edge(int a, int b) const {
    return a != b && ((adj_[a] >> b) & 1U) != 0;
  }

  int degree(int v) const { return std::popcount(adj_[v]); }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (VertexMask m = adj_[v]; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  // Index of edge {a,b} in edges(), or -1.
  int edge_index(int a, int b) const {
    if (!has_edge(a, b)) return -1;
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return static_cast<int>(it - edges_.begin());
  }

  Graph with_edges(std::span<const Edge> extra) const {
    std::vector<Edge> all = edges_;
    for (const Edge& e : extra) {
      if (!has_edge(e.u, e.v)) all.push_back(e);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return Graph(n_, std::move(all));
  }

  Graph without_edge(const Edge& drop) const {
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
      if (e != drop) kept.push_back(e);
    }
    return Graph(n_, std::move(kept));
  }

  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (!has_edge(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

inline bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  return g.num_edges() == n * (n - 1) / 2;
}

// Vertices reachable from `start` inside the vertex set `within`.
inline VertexMask component_of(const Graph& g, int start, VertexMask within) {
  VertexMask seen = VertexMask{1} << start;
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) {
      next |= g.neighbor_mask(std::countr_zero(m));
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return component_of(g, 0, g.all_vertices()) == g.all_vertices();
}

// Induced subgraph on `vertices` (sorted, duplicate-free); vertex k of the
// result is vertices[k].
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const int v = vertices[k];
    if (v < 0 || v >= g.n()) throw PreconditionError("vertex not in graph");
    if (local[v] != -1) throw PreconditionError("duplicate vertex in subset");
    if (k > 0 && vertices[k - 1] > v) throw PreconditionError("vertex subset must be sorted");
    local[v] = static_cast<int>(k);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

inline Graph induced_subgraph(const Graph& g, VertexMask mask) {
  std::vector<int> vs;
  for (VertexMask m = mask; m != 0; m &= m - 1) vs.push_back(std::countr_zero(m));
  return induced_subgraph(g, vs);
}

// Applies a vertex relabelling: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.n(), std::move(edges));
}

// Two-colouring of the vertices if the graph is bipartite; side[v] in {0,1}.
// Colouring starts from the lowest vertex of each component with side 0.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(int p, int q) {
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) edges.emplace_back(a, p + b);
  return Graph(p + q, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, std::move(edges));
}

}  // namespace flexrig
