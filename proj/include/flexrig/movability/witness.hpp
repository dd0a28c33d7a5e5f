#pragma once

#include <string>
#include <vector>

#include "flexrig/graph.hpp"
#include "flexrig/nac.hpp"

namespace flexrig {

// delta_w: blue exactly on the edges at w.
inline Coloring star_coloring(const Graph& g, int w) {
  Coloring c(g.num_edges(), Color::red);
  for (std::size_t k = 0; k < g.num_edges(); ++k)
    if (g.edge(k).incident(w)) c[k] = Color::blue;
  return c;
}

inline std::vector<Coloring> star_witnesses(const Graph& g) {
  std::vector<Coloring> out;
  for (int w = 0; w < g.n(); ++w) out.push_back(star_coloring(g, w));
  return out;
}

// True when every two incident edges get different colours in some witness.
inline bool certify_no_unicolor_pairs(const Graph& g, const std::vector<Coloring>& witnesses) {
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    if (!is_nac(g, witnesses[k])) {
      throw PreconditionError("certify_no_unicolor_pairs: witness " + std::to_string(k) + " is not a NAC-colouring");
    }
  }
  const auto sig = edge_signatures(g, witnesses);
  for (int v = 0; v < g.n(); ++v) {
    std::vector<std::size_t> at;
    for (std::size_t k = 0; k < g.num_edges(); ++k)
      if (g.edge(k).incident(v)) at.push_back(k);
    for (std::size_t a = 0; a < at.size(); ++a)
      for (std::size_t b = a + 1; b < at.size(); ++b)
        if (sig[at[a]] == sig[at[b]]) return false;
  }
  return true;
}

// Five groups of five vertices, 5i..5i+4, on the lines A..E; K5,5 between
// A-B, A-E, C-B, D-E and D-C.
inline Graph g25_graph() {
  const std::pair<int, int> blocks[] = {{0, 1}, {0, 4}, {2, 1}, {3, 4}, {3, 2}};
  std::vector<Edge> es;
  for (auto [p, q] : blocks)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) es.emplace_back(5 * p + i, 5 * q + j);
  return Graph(25, es);
}

}  // namespace flexrig
