#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flexrig/constructions/deltoid.hpp"
#include "flexrig/motion.hpp"

namespace flexrig {

// Vertex v sits in red component i[v] and blue component j[v].
struct GridEmbedding {
  std::vector<int> i;
  std::vector<int> j;
};

struct GridConstruction {
  GridEmbedding embedding;
  Labeling labeling;
  ParametrizedMotion motion;
};

namespace detail {

// Components of the subgraph of edges with colour c, numbered by their
// lowest vertex.
inline std::vector<int> colour_components(const Graph& g, const Coloring& col, Color c) {
  std::vector<Edge> kept;
  for (std::size_t k = 0; k < g.num_edges(); ++k)
    if (col[k] == c) kept.push_back(g.edge(k));
  const Graph sub(g.n(), kept);
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (comp[v] >= 0) continue;
    const VertexMask m = component_of(sub, v, sub.all_vertices());
    for (int w = 0; w < g.n(); ++w)
      if ((m >> w) & 1U) comp[w] = next;
    ++next;
  }
  return comp;
}

}  // namespace detail

inline GridEmbedding grid_embedding(const Graph& g, const Coloring& delta) {
  if (!is_nac(g, delta)) throw PreconditionError("grid_construction: colouring is not a NAC-colouring");
  GridEmbedding out{detail::colour_components(g, delta, Color::red),
                    detail::colour_components(g, delta, Color::blue)};
  std::map<std::pair<int, int>, int> seen;
  for (int v = 0; v < g.n(); ++v) {
    auto [it, fresh] = seen.emplace(std::make_pair(out.i[v], out.j[v]), v);
    if (!fresh) {
      throw ConstructionInapplicable("grid_construction: |R_i ∩ B_j| <= 1 violated, vertices " +
                                     std::to_string(it->second) + " and " + std::to_string(v) +
                                     " share red component " + std::to_string(out.i[v]) + " and blue component " +
                                     std::to_string(out.j[v]));
    }
  }
  return out;
}

// rho_u(v) = i (1,0) + j (cos a, sin a) with cos a = (1-u^2)/(1+u^2),
// sin a = 2u/(1+u^2), pinned to edge 0.
inline GridConstruction grid_construction(const Graph& g, const Coloring& delta) {
  GridConstruction out;
  out.embedding = grid_embedding(g, delta);
  out.labeling.graph = g;
  for (const Edge& e : g.edges()) {
    const int di = out.embedding.i[e.u] - out.embedding.i[e.v];
    const int dj = out.embedding.j[e.u] - out.embedding.j[e.v];
    out.labeling.lambda_sq.emplace_back(di * di + dj * dj);
  }
  const RationalFunction cos_a(int_poly({1, 0, -1}), int_poly({1, 0, 1}));
  const RationalFunction sin_a(int_poly({0, 2}), int_poly({1, 0, 1}));
  std::vector<RationalFunction> x;
  std::vector<RationalFunction> y;
  for (int v = 0; v < g.n(); ++v) {
    const RationalFunction i{Gaussian(out.embedding.i[v])};
    const RationalFunction j{Gaussian(out.embedding.j[v])};
    x.push_back(i + j * cos_a);
    y.push_back(j * sin_a);
  }
  out.motion = pinned_motion(g, x, y, g.edge(0).u, g.edge(0).v);
  return out;
}

}  // namespace flexrig
