#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "flexrig/motion.hpp"
#include "flexrig/tracker.hpp"

namespace flexrig {

// Axes motion of a bipartite graph: side 0 on the x-axis, side 1 on the y-axis.
struct DixonOne {
  Labeling labeling;
  std::vector<int> side;
  std::vector<Rational> param;

  // Valid for |t| < max_t().
  double max_t() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v] == 0) m = std::min(m, std::abs(param[v].get_d()));
    return m;
  }

  Realization sample(double t) const {
    if (std::abs(t) >= max_t()) throw PreconditionError("dixon sampler: |t| must stay below min |x_u|");
    Realization r(side.size());
    for (std::size_t v = 0; v < side.size(); ++v) {
      const double p = param[v].get_d();
      const double sign = p < 0 ? -1.0 : 1.0;
      if (side[v] == 0) {
        r[v] = {sign * std::sqrt(p * p - t * t), 0.0};
      } else {
        r[v] = {0.0, sign * std::sqrt(p * p + t * t)};
      }
    }
    return r;
  }
};

inline DixonOne dixon_one(const Graph& g, const std::vector<Rational>& param) {
  if (g.n() < 3) throw PreconditionError("dixon_one: need at least three vertices");
  if (static_cast<int>(param.size()) != g.n()) throw PreconditionError("dixon_one: one parameter per vertex");
  auto side = bipartition(g);
  if (!side) throw ConstructionInapplicable("dixon_one: graph is not bipartite");
  for (const Rational& p : param)
    if (sgn(p) == 0) throw PreconditionError("dixon_one: parameters must be nonzero");
  DixonOne d;
  d.side = *side;
  d.param = param;
  d.labeling.graph = g;
  for (const Edge& e : g.edges()) {
    const int x = d.side[e.u] == 0 ? e.u : e.v;
    const int y = e.other(x);
    d.labeling.lambda_sq.push_back(param[x] * param[x] + param[y] * param[y]);
  }
  return d;
}

// Parameters 1, 2, 3, ... along each side.
inline DixonOne dixon_one(const Graph& g) {
  auto side = bipartition(g);
  if (!side) throw ConstructionInapplicable("dixon_one: graph is not bipartite");
  std::vector<Rational> param(static_cast<std::size_t>(g.n()));
  int next[2] = {1, 1};
  for (int v = 0; v < g.n(); ++v) param[v] = next[(*side)[v]]++;
  return dixon_one(g, param);
}

struct SampleCheck {
  double max_residual = 0;
  double min_pair_distance = std::numeric_limits<double>::infinity();
  double watched_variation = 0;
};

// Evaluates the sampler at `count` points of (-max_t, max_t).
inline SampleCheck check_samples(const DixonOne& d, int count = 101) {
  SampleCheck out;
  const double bound = 0.95 * d.max_t();
  // Two vertices of one side never form an edge; their distance moves.
  std::vector<int> same;
  for (int want : {0, 1}) {
    same.clear();
    for (std::size_t v = 0; v < d.side.size(); ++v)
      if (d.side[v] == want) same.push_back(static_cast<int>(v));
    if (same.size() >= 2) break;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int k = 0; k < count; ++k) {
    const double t = count == 1 ? 0.0 : -bound + 2 * bound * k / (count - 1);
    const Realization r = d.sample(t);
    for (std::size_t i = 0; i < d.labeling.graph.num_edges(); ++i) {
      const Edge& e = d.labeling.graph.edge(i);
      const double dx = r[e.u].x - r[e.v].x;
      const double dy = r[e.u].y - r[e.v].y;
      out.max_residual = std::max(out.max_residual, std::abs(dx * dx + dy * dy - d.labeling.lambda_sq[i].get_d()));
    }
    out.min_pair_distance = std::min(out.min_pair_distance, detail::min_pair_distance(r));
    const double w = same.size() >= 2 ? std::hypot(r[same[0]].x - r[same[1]].x, r[same[0]].y - r[same[1]].y) : 0.0;
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  out.watched_variation = hi - lo;
  return out;
}

}  // namespace flexrig
