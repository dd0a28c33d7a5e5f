#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "flexrig/graph.hpp"

namespace flexrig {

constexpr int kCanonicalMaxVertices = 12;

struct CanonicalForm {
  std::string certificate;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Equitable refinement: colors are relabelled by (old color, sorted multiset
// of neighbour colors) until stable. Color ids are assigned in sorted key
// order so the result does not depend on vertex labels.
inline std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const int n = g.n();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys[v] = {std::move(key), v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [key, v] : keys) ids.emplace(key, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> fresh(static_cast<std::size_t>(n));
    for (const auto& [key, v] : keys) fresh[v] = ids[key];
    const auto classes = [](std::vector<int> c) {
      std::sort(c.begin(), c.end());
      return std::unique(c.begin(), c.end()) - c.begin();
    };
    const bool stable = classes(fresh) == classes(color);
    color = std::move(fresh);
    if (stable) return color;
  }
}

inline std::string adjacency_string(const Graph& g, const std::vector<int>& position) {
  const int n = g.n();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  std::string bits;
  bits.push_back(static_cast<char>(n));
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(at[i], at[j]) ? '1' : '0');
  }
  return bits;
}

inline void canonical_search(const Graph& g, std::vector<int> color, std::string& best) {
  color = refine(g, std::move(color));
  const int n = g.n();
  std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
  for (int c : color) ++cell_size[c];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
  }
  if (target < 0) {
    std::string s = adjacency_string(g, color);
    if (best.empty() || s < best) best = std::move(s);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    // Individualize v: it precedes the rest of its cell.
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) next[w] = 2 * color[w] + ((color[w] == target && w != v) ? 1 : 0);
    canonical_search(g, std::move(next), best);
  }
}

}  // namespace detail

// Isomorphism certificate via colour refinement and exhaustive
// individualisation of the smallest non-singleton cell.
inline CanonicalForm canonical_form(const Graph& g) {
  if (g.n() > kCanonicalMaxVertices) {
    throw PreconditionError("canonical_form supports at most " + std::to_string(kCanonicalMaxVertices) +
                            " vertices");
  }
  if (g.n() == 0) return {std::string(1, '\0')};
  std::vector<int> start(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) start[v] = g.degree(v);
  std::string best;
  if (is_complete(g) || g.num_edges() == 0) {
    std::vector<int> identity(static_cast<std::size_t>(g.n()));
    std::iota(identity.begin(), identity.end(), 0);
    best = detail::adjacency_string(g, identity);
  } else {
    detail::canonical_search(g, std::move(start), best);
  }
  return {std::move(best)};
}

// The canonical representative of g's isomorphism class.
inline Graph canonical_graph(const Graph& g) {
  const std::string cert = canonical_form(g).certificate;
  const int n = static_cast<unsigned char>(cert[0]);
  std::vector<Edge> edges;
  std::size_t k = 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (cert[k] == '1') edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace detail {

inline bool embed_step(const Graph& h, const Graph& g, const std::vector<int>& order, std::size_t k,
                       std::vector<int>& map, VertexMask used) {
  if (k == order.size()) return true;
  const int v = order[k];
  for (int w = 0; w < g.n(); ++w) {
    if ((used >> w) & 1U) continue;
    if (g.degree(w) < h.degree(v)) continue;
    bool ok = true;
    for (std::size_t p = 0; p < k && ok; ++p) {
      const int u = order[p];
      if (h.has_edge(u, v) && !g.has_edge(map[u], w)) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    if (embed_step(h, g, order, k + 1, map, used | (VertexMask{1} << w))) return true;
  }
  return false;
}

}  // namespace detail

// Whether h is isomorphic to a subgraph of g on all of g's vertices
// (h.n() == g.n()); returns the vertex map h -> g when it is.
inline std::optional<std::vector<int>> spanning_embedding(const Graph& h, const Graph& g) {
  if (h.n() != g.n() || h.num_edges() > g.num_edges()) return std::nullopt;
  // Place high-degree vertices first, then keep the order connected.
  std::vector<int> order;
  VertexMask placed = 0;
  while (static_cast<int>(order.size()) < h.n()) {
    int pick = -1;
    int pick_links = -1;
    for (int v = 0; v < h.n(); ++v) {
      if ((placed >> v) & 1U) continue;
      const int links = std::popcount(h.neighbor_mask(v) & placed);
      if (links > pick_links || (links == pick_links && h.degree(v) > h.degree(pick))) {
        pick = v;
        pick_links = links;
      }
    }
    order.push_back(pick);
    placed |= VertexMask{1} << pick;
  }
  std::vector<int> map(static_cast<std::size_t>(h.n()), -1);
  if (detail::embed_step(h, g, order, 0, map, 0)) return map;
  return std::nullopt;
}

}  // namespace flexrig
