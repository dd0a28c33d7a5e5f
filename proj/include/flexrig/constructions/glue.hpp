#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "flexrig/graph_io.hpp"
#include "flexrig/motion.hpp"
#include "flexrig/motion_io.hpp"
#include "flexrig/tracker.hpp"

namespace flexrig {

using ExactPoint = std::array<Rational, 2>;
using ExactRealization = std::vector<ExactPoint>;

inline Realization to_double(const ExactRealization& r) {
  Realization out;
  for (const auto& p : r) out.push_back({p[0].get_d(), p[1].get_d()});
  return out;
}

inline Labeling induced_labeling(const Graph& g, const ExactRealization& r) {
  Labeling lab;
  lab.graph = g;
  for (const Edge& e : g.edges()) {
    const Rational dx = r[e.u][0] - r[e.v][0];
    const Rational dy = r[e.u][1] - r[e.v][1];
    lab.lambda_sq.push_back(dx * dx + dy * dy);
  }
  return lab;
}

// Restriction of a labeling of g to the subgraph induced by `part`, keeping
// the vertex numbers of g.
inline Labeling restrict_labeling(const Labeling& lab, const std::vector<int>& part) {
  VertexMask m = 0;
  for (int v : part) m |= VertexMask{1} << v;
  Labeling out;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < lab.graph.num_edges(); ++i) {
    const Edge& e = lab.graph.edge(i);
    if (((m >> e.u) & 1U) && ((m >> e.v) & 1U)) {
      es.push_back(e);
      out.lambda_sq.push_back(lab.lambda_sq[i]);
    }
  }
  out.graph = Graph(lab.graph.n(), es);
  return out;
}

// Merges two labelings of subgraphs of g; both use the vertex numbers of g.
inline Labeling glue_labelings(const Graph& g, const Labeling& l1, const Labeling& l2) {
  if (l1.graph.n() != g.n() || l2.graph.n() != g.n()) throw PreconditionError("glue_labelings: vertex count mismatch");
  Labeling out;
  out.graph = g;
  out.lambda_sq.assign(g.num_edges(), Rational(0));
  std::vector<int> seen(g.num_edges(), 0);
  std::size_t shared = 0;
  for (const Labeling* l : {&l1, &l2}) {
    for (std::size_t i = 0; i < l->graph.num_edges(); ++i) {
      const Edge& e = l->graph.edge(i);
      const int k = g.edge_index(e.u, e.v);
      if (k < 0) throw PreconditionError("glue_labelings: subgraph edge not in g");
      if (seen[k] && out.lambda_sq[k] != l->lambda_sq[i]) {
        throw PreconditionError("glue_labelings: labelings disagree on shared edge " + std::to_string(e.u) + "-" +
                                std::to_string(e.v));
      }
      if (seen[k]) ++shared;
      out.lambda_sq[k] = l->lambda_sq[i];
      seen[k] = 1;
    }
  }
  if (shared == 0) throw PreconditionError("glue_labelings: the subgraphs share no edge");
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (!seen[k]) throw PreconditionError("glue_labelings: edge " + std::to_string(g.edge(k).u) + "-" +
                                          std::to_string(g.edge(k).v) + " lies in neither subgraph");
  }
  return out;
}

// Longest edge of every triangle that is collinear in r.
inline std::vector<Edge> collinear_triangle_edges(const Graph& g, const ExactRealization& r) {
  std::vector<Edge> out;
  auto len = [&](int a, int b) {
    const Rational dx = r[a][0] - r[b][0];
    const Rational dy = r[a][1] - r[b][1];
    return Rational(dx * dx + dy * dy);
  };
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < g.n(); ++c) {
        if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        const Rational cross = (r[b][0] - r[a][0]) * (r[c][1] - r[a][1]) - (r[b][1] - r[a][1]) * (r[c][0] - r[a][0]);
        if (sgn(cross) != 0) continue;
        Edge e(a, b);
        if (len(a, c) > len(e.u, e.v)) e = Edge(a, c);
        if (len(b, c) > len(e.u, e.v)) e = Edge(b, c);
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
      }
    }
  }
  return out;
}

struct GlueEvidence {
  // Smallest distance over (V1 \ W) x (V2 \ W) along the path.
  double cross_margin = std::numeric_limits<double>::infinity();
  double residual_part1 = 0;
  double residual_part2 = 0;
  // Largest variation of a non-edge distance along the path.
  double max_nonedge_variation = 0;
  Edge varying_pair{0, 1};
};

inline GlueEvidence glue_evidence(const Labeling& lab, const std::vector<int>& part1, const std::vector<int>& part2,
                                  const TrackResult& path) {
  const Graph& g = lab.graph;
  VertexMask m1 = 0;
  VertexMask m2 = 0;
  for (int v : part1) m1 |= VertexMask{1} << v;
  for (int v : part2) m2 |= VertexMask{1} << v;
  GlueEvidence ev;
  const std::vector<Edge> non = g.non_edges();
  std::vector<double> lo(non.size(), std::numeric_limits<double>::infinity());
  std::vector<double> hi(non.size(), -std::numeric_limits<double>::infinity());
  for (const TrackSample& s : path.samples) {
    const Realization& p = s.points;
    auto dist = [&](int a, int b) { return std::hypot(p[a].x - p[b].x, p[a].y - p[b].y); };
    for (int a = 0; a < g.n(); ++a) {
      if (!((m1 >> a) & 1U) || ((m2 >> a) & 1U)) continue;
      for (int b = 0; b < g.n(); ++b) {
        if (!((m2 >> b) & 1U) || ((m1 >> b) & 1U)) continue;
        ev.cross_margin = std::min(ev.cross_margin, dist(a, b));
      }
    }
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edge(i);
      const double d = dist(e.u, e.v);
      const double r = std::abs(d * d - lab.lambda_sq[i].get_d());
      const bool in1 = ((m1 >> e.u) & 1U) && ((m1 >> e.v) & 1U);
      const bool in2 = ((m2 >> e.u) & 1U) && ((m2 >> e.v) & 1U);
      if (in1) ev.residual_part1 = std::max(ev.residual_part1, r);
      if (in2) ev.residual_part2 = std::max(ev.residual_part2, r);
    }
    for (std::size_t k = 0; k < non.size(); ++k) {
      const double d = dist(non[k].u, non[k].v);
      lo[k] = std::min(lo[k], d);
      hi[k] = std::max(hi[k], d);
    }
  }
  for (std::size_t k = 0; k < non.size(); ++k) {
    if (hi[k] - lo[k] > ev.max_nonedge_variation) {
      ev.max_nonedge_variation = hi[k] - lo[k];
      ev.varying_pair = non[k];
    }
  }
  return ev;
}

struct GlueConstruction {
  std::string name;
  std::vector<int> part1;
  std::vector<int> part2;
  ExactRealization start;
  Labeling labeling;
  std::vector<Edge> implied;
  TrackResult path;
  GlueEvidence evidence;
};

struct GlueOptions {
  TrackerOptions tracker;
  double min_margin = 1e-3;
  double min_variation = 1e-3;
  double tol = 1e-8;
};

// Labeling induced by an exact start realization on two overlapping induced
// subgraphs, certified by one tracked path of the whole graph in both
// directions from the start.
inline GlueConstruction glue_from_start(const Graph& g, const std::vector<int>& part1, const std::vector<int>& part2,
                                        const ExactRealization& start, const GlueOptions& opt = {}) {
  if (static_cast<int>(start.size()) != g.n()) throw PreconditionError("glue: start realization has wrong size");
  VertexMask all = 0;
  for (int v : part1) all |= VertexMask{1} << v;
  for (int v : part2) all |= VertexMask{1} << v;
  if (all != g.all_vertices()) throw PreconditionError("glue: the two parts do not cover the vertices");

  GlueConstruction out;
  out.part1 = part1;
  out.part2 = part2;
  out.start = start;
  const Labeling full = induced_labeling(g, start);
  out.labeling = glue_labelings(g, restrict_labeling(full, part1), restrict_labeling(full, part2));
  for (const Rational& l : out.labeling.lambda_sq)
    if (sgn(l) == 0) throw PreconditionError("glue: start realization puts an edge on a point");
  out.implied = collinear_triangle_edges(g, start);

  TrackerOptions topt = opt.tracker;
  topt.implied = out.implied;
  const Edge fixed = g.edge(0);
  TrackResult forward;
  TrackResult backward;
  topt.direction = 1;
  forward = track_motion(out.labeling, to_double(start), fixed, topt);
  topt.direction = -1;
  backward = track_motion(out.labeling, to_double(start), fixed, topt);
  out.path.kernel_dimension = forward.kernel_dimension;
  for (auto it = backward.samples.rbegin(); it != backward.samples.rend(); ++it) {
    if (it->step == 0) continue;
    TrackSample s = *it;
    s.step = -s.step;
    s.arc = -s.arc;
    out.path.samples.push_back(std::move(s));
  }
  for (const auto& s : forward.samples) out.path.samples.push_back(s);
  for (int s : backward.low_margin_steps) out.path.low_margin_steps.push_back(-s);
  for (int s : forward.low_margin_steps) out.path.low_margin_steps.push_back(s);

  out.evidence = glue_evidence(out.labeling, part1, part2, out.path);
  if (out.evidence.residual_part1 > opt.tol || out.evidence.residual_part2 > opt.tol) {
    throw MotionError("glue: tracked path leaves the labeling of a subgraph");
  }
  if (out.evidence.cross_margin < opt.min_margin) {
    throw MotionError("glue: a vertex of one part meets a vertex of the other along the path");
  }
  if (out.path.min_margin() < opt.min_margin) throw MotionError("glue: tracked path is not injective");
  if (out.evidence.max_nonedge_variation < opt.min_variation) {
    throw MotionError("glue: no non-edge distance changes along the path");
  }
  return out;
}

// {"name", "graph", "start": {"v": [x, y]}, "parts": [[...], [...]]}
inline GlueConstruction glue_from_json(const nlohmann::json& j, const GlueOptions& opt = {}) {
  try {
    const Graph g = graph_from_json(j.at("graph"));
    ExactRealization start(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
      const auto& p = j.at("start").at(std::to_string(v));
      start[v] = {parse_fraction(p.at(0).get<std::string>()), parse_fraction(p.at(1).get<std::string>())};
    }
    const auto parts = j.at("parts").get<std::vector<std::vector<int>>>();
    if (parts.size() != 2) throw ParseError("glue data needs exactly two parts");
    GlueConstruction out = glue_from_start(g, parts[0], parts[1], start, opt);
    out.name = j.value("name", "");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("glue data: ") + e.what());
  }
}

inline GlueConstruction glue_from_file(const std::filesystem::path& path, const GlueOptions& opt = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return glue_from_json(j, opt);
}

}  // namespace flexrig
