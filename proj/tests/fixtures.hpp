#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "flexrig/graph.hpp"
#include "flexrig/nac.hpp"

namespace fixtures {

using flexrig::Edge;
using flexrig::Graph;

// Graph from pairs of 1-based labels.
inline Graph one_based(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a - 1, b - 1);
  return Graph(n, std::move(edges));
}

inline std::vector<Edge> one_based_edges(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a - 1, b - 1);
  return edges;
}

// Vertices a..g as 0..6.
inline Graph no_nac_seven() {
  return Graph::from_pairs(7, {{6, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5},
                               {3, 5}, {4, 5}, {0, 3}, {6, 0}, {6, 3}});
}

// Labels 1..7 as 0..6.
inline Graph complete_closure_seven() {
  return one_based(7, {{1, 2}, {1, 3}, {2, 3}, {3, 5}, {3, 4}, {4, 5}, {5, 7}, {2, 7}, {1, 6}, {4, 6}, {6, 7}});
}

// The three colourings drawn for the graph above, as red edge sets.
inline std::vector<std::vector<Edge>> complete_closure_red_sets() {
  return {one_based_edges({{1, 6}, {4, 6}, {6, 7}}),
          one_based_edges({{6, 7}, {5, 7}, {2, 7}}),
          one_based_edges({{1, 6}, {4, 6}, {5, 7}, {2, 7}})};
}

inline Graph movable_seven() {
  return Graph::from_pairs(7, {{1, 2}, {1, 5}, {3, 5}, {2, 3}, {0, 2}, {4, 6}, {0, 1}, {0, 6}, {1, 4}, {3, 4}, {5, 6}});
}

// Q1 with labels 1..7 as 0..6.
inline Graph q1_labels() {
  return one_based(7, {{1, 2}, {1, 5}, {3, 5}, {2, 3}, {7, 2}, {4, 6}, {7, 1}, {7, 6}, {1, 4}, {3, 4}, {5, 6}});
}

inline std::vector<Edge> q1_delta1_red() { return one_based_edges({{7, 6}, {1, 4}, {3, 4}, {5, 6}}); }
inline std::vector<Edge> q1_delta2_red() { return one_based_edges({{1, 5}, {7, 6}, {1, 4}, {2, 3}}); }

// Deltoid 4-cycle with labels 1..4 as 0..3.
inline Graph deltoid() { return one_based(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace fixtures
