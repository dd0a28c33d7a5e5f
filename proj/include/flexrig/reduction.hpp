#pragma once

#include <vector>

#include "flexrig/graph.hpp"

namespace flexrig {

struct DegreeTwoReduction {
  Graph graph;
  // kept[k] is the original label of vertex k of `graph`.
  std::vector<int> kept;
  // Original labels in removal order.
  std::vector<int> removed;
  // Set when the reduction leaves fewer than one edge.
  bool trivially_movable = false;
};

// Removes degree-2 vertices one at a time, lowest label first, rescanning
// after every removal.
inline DegreeTwoReduction reduce_degree_two(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("reduce_degree_two: graph must be connected");
  VertexMask alive = g.all_vertices();
  std::vector<int> removed;
  for (;;) {
    int pick = -1;
    for (VertexMask m = alive; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (std::popcount(g.neighbor_mask(v) & alive) == 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    alive &= ~(VertexMask{1} << pick);
    removed.push_back(pick);
  }
  DegreeTwoReduction out;
  out.graph = induced_subgraph(g, alive);
  for (VertexMask m = alive; m != 0; m &= m - 1) out.kept.push_back(std::countr_zero(m));
  out.removed = std::move(removed);
  out.trivially_movable = out.graph.num_edges() < 1;
  return out;
}

inline int min_degree(const Graph& g) {
  int best = g.n() == 0 ? 0 : g.n();
  for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline bool has_degree_two_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 2) return true;
  }
  return false;
}

}  // namespace flexrig
