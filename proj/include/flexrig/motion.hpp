#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flexrig/exact/rational_function.hpp"
#include "flexrig/exact/roots.hpp"
#include "flexrig/graph.hpp"
#include "flexrig/nac.hpp"

namespace flexrig {

// Squared edge lengths aligned with graph.edges().
struct Labeling {
  Graph graph;
  std::vector<Rational> lambda_sq;

  const Rational& at(int u, int v) const {
    const int idx = graph.edge_index(u, v);
    if (idx < 0) throw PreconditionError("labeling: not an edge");
    return lambda_sq[idx];
  }
};

// Rational curve of realizations: vertex v sits at (x[v](t), y[v](t)), the
// fixed edge (fixed_u, fixed_v) stays at (0,0), (lambda,0).
struct ParametrizedMotion {
  Graph graph;
  std::vector<RationalFunction> x;
  std::vector<RationalFunction> y;
  int fixed_u = 0;
  int fixed_v = 1;
};

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class a;
  mpz_class b;
  mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
  return Rational(a, b);
}

// Throws MotionError unless the motion satisfies the pinning invariants.
inline void validate_motion(const ParametrizedMotion& m) {
  const auto n = static_cast<std::size_t>(m.graph.n());
  if (m.x.size() != n || m.y.size() != n) throw MotionError("motion: one coordinate pair per vertex required");
  for (std::size_t v = 0; v < n; ++v) {
    if (!m.x[v].is_real() || !m.y[v].is_real()) throw MotionError("motion: coordinates must have real coefficients");
  }
  if (m.graph.edge_index(m.fixed_u, m.fixed_v) < 0) throw MotionError("motion: fixed pair is not an edge");
  if (!m.x[m.fixed_u].is_zero() || !m.y[m.fixed_u].is_zero() || !m.y[m.fixed_v].is_zero()) {
    throw MotionError("motion: fixed edge is not pinned to the x-axis");
  }
  const auto lam = m.x[m.fixed_v].constant();
  if (!lam || sgn(lam->re) <= 0) throw MotionError("motion: x of the second fixed vertex must be a positive constant");
}

// W_{u,v} = (x_v - x_u) + i (y_v - y_u).
inline RationalFunction w_function(const ParametrizedMotion& m, int u, int v) {
  if (u == v) throw PreconditionError("w_function: identical vertices");
  return (m.x[v] - m.x[u]) + RationalFunction(Gaussian::i()) * (m.y[v] - m.y[u]);
}

// Z_{u,v} = (x_v - x_u) - i (y_v - y_u).
inline RationalFunction z_function(const ParametrizedMotion& m, int u, int v) {
  if (u == v) throw PreconditionError("z_function: identical vertices");
  return (m.x[v] - m.x[u]) - RationalFunction(Gaussian::i()) * (m.y[v] - m.y[u]);
}

inline RationalFunction squared_distance(const ParametrizedMotion& m, int u, int v) {
  const RationalFunction dx = m.x[v] - m.x[u];
  const RationalFunction dy = m.y[v] - m.y[u];
  return dx * dx + dy * dy;
}

struct CompatibilityReport {
  Labeling labeling;
  // Some vertex pair changes its distance along the curve.
  bool flexible = false;
};

inline CompatibilityReport verify_compatibility(const ParametrizedMotion& m) {
  validate_motion(m);
  CompatibilityReport out;
  out.labeling.graph = m.graph;
  for (const Edge& e : m.graph.edges()) {
    const auto c = squared_distance(m, e.u, e.v).constant();
    if (!c) {
      throw MotionError("motion: squared length of edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " is not constant");
    }
    if (sgn(c->re) <= 0) {
      throw MotionError("motion: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has zero length");
    }
    out.labeling.lambda_sq.push_back(c->re);
  }
  for (int a = 0; a < m.graph.n() && !out.flexible; ++a) {
    for (int b = a + 1; b < m.graph.n() && !out.flexible; ++b) {
      if (!m.graph.has_edge(a, b) && !squared_distance(m, a, b).is_constant()) out.flexible = true;
    }
  }
  return out;
}

struct InjectivityReport {
  bool proper = false;
  // Pairs mapped to the same point for every parameter.
  std::vector<Edge> coinciding;
  // Triangles of the graph that stay collinear along the whole curve.
  std::vector<std::array<int, 3>> degenerate_triangles;
};

inline InjectivityReport verify_injectivity(const ParametrizedMotion& m) {
  validate_motion(m);
  InjectivityReport out;
  const int n = m.graph.n();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (squared_distance(m, a, b).is_zero()) out.coinciding.emplace_back(a, b);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!m.graph.has_edge(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!m.graph.has_edge(a, c) || !m.graph.has_edge(b, c)) continue;
        const RationalFunction cross =
            (m.x[b] - m.x[a]) * (m.y[c] - m.y[a]) - (m.y[b] - m.y[a]) * (m.x[c] - m.x[a]);
        if (cross.is_zero()) out.degenerate_triangles.push_back({a, b, c});
      }
    }
  }
  out.proper = out.coinciding.empty() && verify_compatibility(m).flexible;
  return out;
}

// Rotates and translates an arbitrary rational curve so that u sits at the
// origin and v on the positive x-axis. Needs a rational length |uv|.
inline ParametrizedMotion pinned_motion(const Graph& g, const std::vector<RationalFunction>& x,
                                        const std::vector<RationalFunction>& y, int u2, int v2) {
  if (g.edge_index(u2, v2) < 0) throw PreconditionError("pinned_motion: not an edge");
  const RationalFunction ex = x[v2] - x[u2];
  const RationalFunction ey = y[v2] - y[u2];
  const auto len_sq = (ex * ex + ey * ey).constant();
  if (!len_sq) throw MotionError("pinned_motion: edge length is not constant");
  const auto len = rational_sqrt(len_sq->re);
  if (!len || sgn(*len) == 0) throw MotionError("pinned_motion: edge length must be a nonzero rational");
  const RationalFunction inv(Gaussian(1 / *len));
  ParametrizedMotion out;
  out.graph = g;
  out.fixed_u = u2;
  out.fixed_v = v2;
  for (int w = 0; w < g.n(); ++w) {
    const RationalFunction dx = x[w] - x[u2];
    const RationalFunction dy = y[w] - y[u2];
    out.x.push_back((dx * ex + dy * ey) * inv);
    out.y.push_back((dy * ex - dx * ey) * inv);
  }
  validate_motion(out);
  return out;
}

inline ParametrizedMotion refix_edge(const ParametrizedMotion& m, int u2, int v2) {
  validate_motion(m);
  if (m.graph.edge_index(u2, v2) < 0) throw PreconditionError("refix_edge: not an edge");
  return pinned_motion(m.graph, m.x, m.y, u2, v2);
}

// A point of the parameter line or the point at infinity.
struct Place {
  bool infinity = false;
  Gaussian point;

  static Place at(Gaussian p) { return {false, std::move(p)}; }
  static Place at_infinity() { return {true, Gaussian()}; }

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinity == b.infinity && (a.infinity || a.point == b.point);
  }

  // The local parameter, e.g. "t+2i" for the point -2i.
  std::string to_string() const {
    if (infinity) return "inf";
    if (point.is_zero()) return "t";
    const Gaussian neg = -point;
    const std::string s = neg.to_string();
    return "t" + (s[0] == '-' ? s : "+" + s);
  }
};

inline int valuation(const RationalFunction& f, const Place& p) {
  if (f.is_zero()) throw PreconditionError("valuation of the zero function");
  if (p.infinity) return f.den().degree() - f.num().degree();
  return root_multiplicity(f.num(), p.point) - root_multiplicity(f.den(), p.point);
}

struct PlaceSet {
  std::vector<Place> places;
  // Square-free factors of positive degree with no root in Q(i).
  std::vector<Poly> unresolved;
};

// W-functions of the edges, oriented as in graph.edges().
inline std::vector<RationalFunction> edge_w_functions(const ParametrizedMotion& m) {
  std::vector<RationalFunction> out;
  for (const Edge& e : m.graph.edges()) out.push_back(w_function(m, e.u, e.v));
  return out;
}

inline PlaceSet candidate_places(const ParametrizedMotion& m) {
  validate_motion(m);
  PlaceSet out;
  std::vector<Poly> seen_unresolved;
  auto add_roots = [&](const Poly& p) {
    if (p.degree() < 1) return;
    const GaussianRoots r = gaussian_rational_roots(p);
    for (const auto& x : r.roots) {
      const Place pl = Place::at(x);
      if (std::find(out.places.begin(), out.places.end(), pl) == out.places.end()) out.places.push_back(pl);
    }
    if (r.unresolved.degree() >= 1 &&
        std::find(out.unresolved.begin(), out.unresolved.end(), r.unresolved) == out.unresolved.end()) {
      out.unresolved.push_back(r.unresolved);
    }
  };
  for (const auto& w : edge_w_functions(m)) {
    add_roots(w.num());
    add_roots(w.den());
  }
  std::sort(out.places.begin(), out.places.end(), [](const Place& a, const Place& b) {
    const Rational na = a.point.norm();
    const Rational nb = b.point.norm();
    if (na != nb) return na < nb;
    if (a.point.im != b.point.im) return a.point.im < b.point.im;
    return a.point.re < b.point.re;
  });
  out.places.push_back(Place::at_infinity());
  return out;
}

struct ValuationTable {
  Place place;
  // Per edge in graph.edges() order.
  std::vector<int> nu;
};

inline ValuationTable valuation_table(const ParametrizedMotion& m, const Place& p) {
  ValuationTable out{p, {}};
  for (const auto& w : edge_w_functions(m)) out.nu.push_back(valuation(w, p));
  return out;
}

// Colourings "red iff nu > alpha" for every attained alpha with a strictly
// larger value present.
inline std::vector<std::pair<int, Coloring>> threshold_colorings(const ValuationTable& table) {
  std::set<int> values(table.nu.begin(), table.nu.end());
  std::vector<std::pair<int, Coloring>> out;
  for (int alpha : values) {
    if (alpha == *values.rbegin()) break;
    Coloring c(table.nu.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = table.nu[i] > alpha ? Color::red : Color::blue;
    out.emplace_back(alpha, std::move(c));
  }
  return out;
}

struct ActiveNacReport {
  std::vector<Coloring> colorings;
  // Set when some W has a factor without Gaussian-rational roots; the list
  // is then only a lower bound.
  bool lower_bound = false;
  std::vector<Poly> unresolved;
};

inline ActiveNacReport active_nac_colorings(const ParametrizedMotion& m) {
  const PlaceSet ps = candidate_places(m);
  ActiveNacReport out;
  out.unresolved = ps.unresolved;
  out.lower_bound = !ps.unresolved.empty();
  std::set<Coloring> seen;
  for (const Place& p : ps.places) {
    for (auto& [alpha, c] : threshold_colorings(valuation_table(m, p))) {
      if (!is_nac(m.graph, c)) {
        throw MotionError("valuation threshold at " + p.to_string() + " produced a colouring that is not NAC");
      }
      if (seen.insert(c).second) out.colorings.push_back(c);
    }
  }
  return out;
}

}  // namespace flexrig
