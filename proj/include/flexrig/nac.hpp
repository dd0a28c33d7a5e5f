#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "flexrig/graph.hpp"
#include "flexrig/union_find.hpp"

namespace flexrig {

enum class Color : std::uint8_t { red = 0, blue = 1 };

constexpr Color opposite(Color c) { return c == Color::red ? Color::blue : Color::red; }

// Edge colouring aligned with Graph::edges().
using Coloring = std::vector<Color>;

constexpr std::size_t kDefaultEnumerationCap = 40;

inline Coloring conjugate(const Coloring& c) {
  Coloring out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = opposite(c[i]);
  return out;
}

// Representative of {c, conj c} with edge 0 blue.
inline Coloring normalized(const Coloring& c) {
  if (!c.empty() && c[0] == Color::red) return conjugate(c);
  return c;
}

// An almost red cycle exists iff some blue edge has its endpoints joined by a
// red path, and symmetrically.
inline bool is_nac(const Graph& g, const Coloring& c) {
  if (c.size() != g.num_edges()) {
    throw PreconditionError("is_nac: colouring must assign a colour to every edge");
  }
  bool has_red = false;
  bool has_blue = false;
  UnionFind red(g.n());
  UnionFind blue(g.n());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Edge& e = g.edge(i);
    if (c[i] == Color::red) {
      has_red = true;
      red.unite(e.u, e.v);
    } else {
      has_blue = true;
      blue.unite(e.u, e.v);
    }
  }
  if (!has_red || !has_blue) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Edge& e = g.edge(i);
    if (c[i] == Color::red && blue.same(e.u, e.v)) return false;
    if (c[i] == Color::blue && red.same(e.u, e.v)) return false;
  }
  return true;
}

// Edge classes forced to share a colour: the transitive closure of
// "two edges of a common triangle".
inline std::vector<int> triangle_classes(const Graph& g) {
  UnionFind uf(static_cast<int>(g.num_edges()));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    for (VertexMask m = g.neighbor_mask(e.u) & g.neighbor_mask(e.v); m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      uf.unite(static_cast<int>(i), g.edge_index(e.u, w));
      uf.unite(static_cast<int>(i), g.edge_index(e.v, w));
    }
  }
  std::vector<int> root(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) root[i] = uf.find(static_cast<int>(i));
  return root;
}

namespace detail {

// Edges in depth-first discovery order from vertex 0 (then from any vertex
// not yet reached).
inline std::vector<int> dfs_edge_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> edge_seen(g.num_edges(), 0);
  std::vector<char> vertex_seen(static_cast<std::size_t>(g.n()), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (vertex_seen[s]) continue;
    vertex_seen[s] = 1;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      const auto nb = g.neighbors(v);
      if (k == nb.size()) {
        stack.pop_back();
        continue;
      }
      const int w = nb[k++];
      const int idx = g.edge_index(v, w);
      if (!edge_seen[idx]) {
        edge_seen[idx] = 1;
        order.push_back(idx);
      }
      if (!vertex_seen[w]) {
        vertex_seen[w] = 1;
        stack.emplace_back(w, 0);
      }
    }
  }
  return order;
}

class NacEnumerator {
 public:
  explicit NacEnumerator(const Graph& g)
      : g_(g), red_(g.n()), blue_(g.n()), colors_(g.num_edges(), Color::blue), assigned_(g.num_edges(), 0) {
    const std::vector<int> root = triangle_classes(g);
    std::map<int, int> class_of_root;
    // Class of edge 0 first, then classes in DFS edge order.
    std::vector<int> order = dfs_edge_order(g);
    if (!order.empty()) {
      auto it = std::find(order.begin(), order.end(), 0);
      std::rotate(order.begin(), it, it + 1);
    }
    for (int idx : order) {
      auto [it, inserted] = class_of_root.emplace(root[idx], static_cast<int>(classes_.size()));
      if (inserted) classes_.emplace_back();
      classes_[it->second].push_back(idx);
    }
  }

  std::vector<Coloring> run() {
    if (!classes_.empty()) descend(0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t k) {
    if (k == classes_.size()) {
      if (std::find(colors_.begin(), colors_.end(), Color::red) != colors_.end()) found_.push_back(colors_);
      return;
    }
    for (Color c : {Color::blue, Color::red}) {
      if (k == 0 && c == Color::red) continue;
      UnionFind& same = c == Color::red ? red_ : blue_;
      UnionFind& other = c == Color::red ? blue_ : red_;
      const std::size_t mark = same.checkpoint();
      bool ok = true;
      for (int idx : classes_[k]) {
        const Edge& e = g_.edge(idx);
        if (other.same(e.u, e.v)) ok = false;
        same.unite(e.u, e.v);
        colors_[idx] = c;
        assigned_[idx] = 1;
      }
      if (ok) {
        for (std::size_t i = 0; i < colors_.size() && ok; ++i) {
          if (assigned_[i] && colors_[i] != c && same.same(g_.edge(i).u, g_.edge(i).v)) ok = false;
        }
      }
      if (ok) descend(k + 1);
      for (int idx : classes_[k]) assigned_[idx] = 0;
      same.rollback(mark);
    }
  }

  const Graph& g_;
  UnionFind red_;
  UnionFind blue_;
  Coloring colors_;
  std::vector<char> assigned_;
  std::vector<std::vector<int>> classes_;
  std::vector<Coloring> found_;
};

}  // namespace detail

// All NAC-colourings of g. With non_conjugated set, one representative per
// conjugate pair is returned, the one colouring edge 0 blue.
inline std::vector<Coloring> enumerate_nac(const Graph& g, bool non_conjugated = false,
                                           std::size_t cap = kDefaultEnumerationCap) {
  if (g.num_edges() > cap) {
    throw EnumerationCapExceeded("NAC enumeration refused: " + std::to_string(g.num_edges()) +
                                 " edges exceed the cap of " + std::to_string(cap));
  }
  std::vector<Coloring> reps = detail::NacEnumerator(g).run();
  if (non_conjugated) return reps;
  std::vector<Coloring> all;
  all.reserve(2 * reps.size());
  for (const Coloring& c : reps) {
    all.push_back(c);
    all.push_back(conjugate(c));
  }
  return all;
}

// signature[e] has bit k set iff edge e is blue in colourings[k]. Colourings
// must be normalized.
inline std::vector<std::vector<bool>> edge_signatures(const Graph& g, const std::vector<Coloring>& colourings) {
  std::vector<std::vector<bool>> sig(g.num_edges(), std::vector<bool>(colourings.size()));
  for (std::size_t k = 0; k < colourings.size(); ++k) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) sig[i][k] = colourings[k][i] == Color::blue;
  }
  return sig;
}

// Groups of edges with equal colour in every listed colouring; each group is
// given as a list of edge indices.
inline std::vector<std::vector<int>> equal_colour_classes(const Graph& g, const std::vector<Coloring>& reps) {
  std::vector<Coloring> norm;
  norm.reserve(reps.size());
  for (const Coloring& c : reps) norm.push_back(normalized(c));
  const auto sig = edge_signatures(g, norm);
  std::map<std::vector<bool>, std::vector<int>> groups;
  for (std::size_t i = 0; i < g.num_edges(); ++i) groups[sig[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [key, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// Non-adjacent pairs joined by a path that is unicolour in every colouring in
// `reps` (which must be all of NAC(g), up to conjugation). With no colourings
// this is every non-adjacent pair of a connected graph.
inline std::vector<Edge> unicolor_pairs_from(const Graph& g, const std::vector<Coloring>& reps) {
  std::vector<Edge> out;
  for (const std::vector<int>& cls : equal_colour_classes(g, reps)) {
    VertexMask touched = 0;
    VertexMask used_mask = 0;
    for (int idx : cls) touched |= (VertexMask{1} << g.edge(idx).u) | (VertexMask{1} << g.edge(idx).v);
    // Components of the subgraph spanned by this class.
    std::vector<VertexMask> adj(static_cast<std::size_t>(g.n()), 0);
    for (int idx : cls) {
      const Edge& e = g.edge(idx);
      adj[e.u] |= VertexMask{1} << e.v;
      adj[e.v] |= VertexMask{1} << e.u;
    }
    for (VertexMask m = touched; m != 0; m &= m - 1) {
      const int s = std::countr_zero(m);
      if ((used_mask >> s) & 1U) continue;
      VertexMask comp = VertexMask{1} << s;
      VertexMask frontier = comp;
      while (frontier != 0) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= ~comp;
        comp |= next;
        frontier = next;
      }
      used_mask |= comp;
      for (VertexMask a = comp; a != 0; a &= a - 1) {
        const int x = std::countr_zero(a);
        for (VertexMask b = comp & ~((VertexMask{2} << x) - 1); b != 0; b &= b - 1) {
          const int y = std::countr_zero(b);
          if (!g.has_edge(x, y)) out.emplace_back(x, y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Edge> unicolor_pairs(const Graph& g, std::size_t cap = kDefaultEnumerationCap) {
  if (!is_connected(g)) throw PreconditionError("unicolor_pairs: graph must be connected");
  return unicolor_pairs_from(g, enumerate_nac(g, true, cap));
}

inline nlohmann::json coloring_to_json(const Graph& g, const Coloring& c) {
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json colors = nlohmann::json::array();
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    edges.push_back({g.edge(i).u, g.edge(i).v});
    colors.push_back(c[i] == Color::red ? "red" : "blue");
  }
  return {{"edges", edges}, {"colors", colors}};
}

// Reads a colouring document and aligns it with g's edge order. The edge
// list may be in any order but must match g's edge set exactly.
inline Coloring coloring_from_json(const Graph& g, const nlohmann::json& j) {
  try {
    const auto& edges = j.at("edges");
    const auto& colors = j.at("colors");
    if (!edges.is_array() || !colors.is_array() || edges.size() != colors.size()) {
      throw ParseError("colouring JSON: edges and colors must be arrays of equal length");
    }
    if (edges.size() != g.num_edges()) throw ParseError("colouring JSON: colouring must cover every edge");
    Coloring out(g.num_edges(), Color::blue);
    std::vector<char> seen(g.num_edges(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const int idx = g.edge_index(edges[k].at(0).get<int>(), edges[k].at(1).get<int>());
      if (idx < 0) throw ParseError("colouring JSON: edge not in graph");
      if (seen[idx]) throw ParseError("colouring JSON: duplicate edge");
      seen[idx] = 1;
      const std::string name = colors[k].get<std::string>();
      if (name == "red") {
        out[idx] = Color::red;
      } else if (name != "blue") {
        throw ParseError("colouring JSON: colour must be \"red\" or \"blue\"");
      }
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("colouring JSON: ") + ex.what());
  }
}

// Colouring with the listed edges red and every other edge blue.
inline Coloring coloring_with_red(const Graph& g, std::span<const Edge> red) {
  Coloring c(g.num_edges(), Color::blue);
  for (const Edge& e : red) {
    const int idx = g.edge_index(e.u, e.v);
    if (idx < 0) throw PreconditionError("coloring_with_red: edge not in graph");
    c[idx] = Color::red;
  }
  return c;
}

}  // namespace flexrig
