#pragma once

#include <vector>

#include "flexrig/nac.hpp"

namespace flexrig {

struct ClosureReport {
  Graph closure;
  // Pairs added in each round, in round order.
  std::vector<std::vector<Edge>> added;
  // NAC(closure) modulo conjugation, edge 0 blue.
  std::vector<Coloring> nac;

  std::size_t iterations() const { return added.size(); }
};

namespace detail {

// NAC(g ∪ extra) from NAC(g) for a connected g: every colouring of the larger
// graph restricts to one of g, and each added pair takes the colour of a path
// that is unicolour in every colouring of g.
inline std::vector<Coloring> extend_nac(const Graph& g, const std::vector<Coloring>& reps,
                                        const Graph& bigger) {
  std::vector<Coloring> out;
  if (reps.empty()) return out;
  const auto classes = equal_colour_classes(g, reps);
  std::vector<Graph> parts;
  std::vector<VertexMask> spans;
  for (const auto& cls : classes) {
    std::vector<Edge> es;
    VertexMask span = 0;
    for (int idx : cls) {
      es.push_back(g.edge(idx));
      span |= (VertexMask{1} << g.edge(idx).u) | (VertexMask{1} << g.edge(idx).v);
    }
    parts.emplace_back(g.n(), std::move(es));
    spans.push_back(span);
  }
  // For each edge of the larger graph, an edge of g whose colour it copies.
  std::vector<int> source(bigger.num_edges(), -1);
  for (std::size_t i = 0; i < bigger.num_edges(); ++i) {
    const Edge& e = bigger.edge(i);
    source[i] = g.edge_index(e.u, e.v);
    for (std::size_t k = 0; k < classes.size() && source[i] < 0; ++k) {
      if (((spans[k] >> e.u) & 1U) && ((component_of(parts[k], e.u, spans[k]) >> e.v) & 1U)) {
        source[i] = classes[k].front();
      }
    }
    if (source[i] < 0) throw PreconditionError("extend_nac: added pair is not joined by a unicolour path");
  }
  for (const Coloring& c : reps) {
    Coloring ext(bigger.num_edges());
    for (std::size_t i = 0; i < bigger.num_edges(); ++i) ext[i] = c[source[i]];
    if (is_nac(bigger, ext)) out.push_back(normalized(ext));
  }
  return out;
}

}  // namespace detail

// Iterates G <- G ∪ U(G) until U(G) is empty.
inline ClosureReport constant_distance_closure(const Graph& g, std::size_t cap = kDefaultEnumerationCap) {
  if (!is_connected(g)) throw PreconditionError("constant_distance_closure: graph must be connected");
  ClosureReport report;
  report.closure = g;
  report.nac = enumerate_nac(g, true, cap);
  for (;;) {
    std::vector<Edge> extra = unicolor_pairs_from(report.closure, report.nac);
    if (extra.empty()) break;
    Graph bigger = report.closure.with_edges(extra);
    report.nac = detail::extend_nac(report.closure, report.nac, bigger);
    report.closure = std::move(bigger);
    report.added.push_back(std::move(extra));
  }
  return report;
}

}  // namespace flexrig
