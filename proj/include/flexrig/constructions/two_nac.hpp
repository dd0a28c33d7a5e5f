#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "flexrig/constructions/deltoid.hpp"
#include "flexrig/motion.hpp"
#include "flexrig/nac.hpp"

namespace flexrig {

using Vec3Q = std::array<Rational, 3>;
using EmbeddingR3 = std::vector<Vec3Q>;

// Direction class of a colour pair: 0 -> (1,0,0), 1 -> (0,1,0), 2 -> (0,0,1),
// 3 -> (-1,-1,-1).
inline int direction_class(Color c1, Color c2) {
  if (c1 == Color::blue) return c2 == Color::blue ? 0 : 1;
  return c2 == Color::blue ? 2 : 3;
}

inline Vec3Q direction_vector(int cls) {
  switch (cls) {
    case 0: return {Rational(1), Rational(0), Rational(0)};
    case 1: return {Rational(0), Rational(1), Rational(0)};
    case 2: return {Rational(0), Rational(0), Rational(1)};
    default: return {Rational(-1), Rational(-1), Rational(-1)};
  }
}

// Class of d if d is a nonzero multiple of one of the four directions.
inline std::optional<int> classify_direction(const Vec3Q& d, Rational* scale = nullptr) {
  const int nz = (sgn(d[0]) != 0) + (sgn(d[1]) != 0) + (sgn(d[2]) != 0);
  if (nz == 1) {
    for (int k = 0; k < 3; ++k) {
      if (sgn(d[k]) != 0) {
        if (scale) *scale = d[k];
        return k;
      }
    }
  }
  if (nz == 3 && d[0] == d[1] && d[1] == d[2]) {
    if (scale) *scale = -d[0];
    return 3;
  }
  return std::nullopt;
}

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Basis of {x : A x = 0}, by reduced row echelon form.
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

struct TwoNacSystem {
  // Basis of the solutions, each one a full embedding with vertex 0 at the origin.
  std::vector<EmbeddingR3> basis;
  // Direction class of every edge.
  std::vector<int> classes;
};

inline TwoNacSystem two_nac_solution_space(const Graph& g, const Coloring& d1, const Coloring& d2) {
  if (!is_nac(g, d1) || !is_nac(g, d2)) throw PreconditionError("two_nac_embedding: both colourings must be NAC");
  TwoNacSystem sys;
  std::array<int, 4> count{};
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    sys.classes.push_back(direction_class(d1[k], d2[k]));
    ++count[sys.classes.back()];
  }
  for (int c = 0; c < 4; ++c) {
    if (count[c] == 0) {
      throw ConstructionInapplicable("two_nac_embedding: direction class " + std::to_string(c) +
                                     " is empty (no edge has that colour pair)");
    }
  }
  // Variables: coordinates of vertices 1..n-1; vertex 0 is pinned at the origin.
  const int n = g.n();
  const std::size_t cols = 3 * static_cast<std::size_t>(n - 1);
  auto var = [](int v, int k) { return 3 * (v - 1) + k; };
  detail::RationalMatrix a;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    // Rows r with sum_k r_k (w(u)_k - w(v)_k) = 0.
    std::vector<std::array<int, 3>> rows;
    switch (sys.classes[e]) {
      case 0: rows = {{0, 1, 0}, {0, 0, 1}}; break;
      case 1: rows = {{1, 0, 0}, {0, 0, 1}}; break;
      case 2: rows = {{1, 0, 0}, {0, 1, 0}}; break;
      default: rows = {{1, -1, 0}, {0, 1, -1}}; break;
    }
    for (const auto& r : rows) {
      std::vector<Rational> line(cols, Rational(0));
      for (int k = 0; k < 3; ++k) {
        if (ed.u != 0) line[var(ed.u, k)] += r[k];
        if (ed.v != 0) line[var(ed.v, k)] -= r[k];
      }
      a.push_back(std::move(line));
    }
  }
  for (const auto& b : detail::nullspace(std::move(a), cols)) {
    EmbeddingR3 w(static_cast<std::size_t>(n), Vec3Q{Rational(0), Rational(0), Rational(0)});
    for (int v = 1; v < n; ++v)
      for (int k = 0; k < 3; ++k) w[v][k] = b[var(v, k)];
    // Scale so that the first nonzero coordinate is 1.
    const auto lead = std::find_if(b.begin(), b.end(), [](const Rational& x) { return sgn(x) != 0; });
    const Rational inv = 1 / *lead;
    for (auto& p : w)
      for (auto& x : p) x *= inv;
    sys.basis.push_back(std::move(w));
  }
  if (sys.basis.empty()) throw ConstructionInapplicable("two_nac_embedding: the linear system has only the zero solution");
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool same = true;
      for (const auto& b : sys.basis) same = same && b[u] == b[v];
      if (same) {
        throw ConstructionInapplicable("two_nac_embedding: vertices " + std::to_string(u) + " and " +
                                       std::to_string(v) + " coincide on the whole solution space");
      }
    }
  }
  return sys;
}

inline bool is_injective(const EmbeddingR3& w) {
  for (std::size_t u = 0; u < w.size(); ++u)
    for (std::size_t v = u + 1; v < w.size(); ++v)
      if (w[u] == w[v]) return false;
  return true;
}

// A random integer combination of the basis that is injective.
inline EmbeddingR3 two_nac_embedding(const Graph& g, const Coloring& d1, const Coloring& d2,
                                     std::uint64_t seed = 1, int retries = 64) {
  const TwoNacSystem sys = two_nac_solution_space(g, d1, d2);
  if (sys.basis.size() == 1 && is_injective(sys.basis[0])) return sys.basis[0];
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 9);
  std::bernoulli_distribution flip(0.5);
  for (int attempt = 0; attempt < retries; ++attempt) {
    EmbeddingR3 w(static_cast<std::size_t>(g.n()), Vec3Q{Rational(0), Rational(0), Rational(0)});
    for (const auto& b : sys.basis) {
      const Rational c = flip(rng) ? coeff(rng) : -coeff(rng);
      for (int v = 0; v < g.n(); ++v)
        for (int k = 0; k < 3; ++k) w[v][k] += c * b[v][k];
    }
    if (is_injective(w)) return w;
  }
  throw ConstructionInapplicable("two_nac_embedding: no injective point found after " + std::to_string(retries) +
                                 " samples");
}

// u -> w1(u) f1 + w2(u) f2 + w3(u) f3, pinned on an edge of class (1,0,0).
inline ParametrizedMotion motion_from_embedding(const Graph& g, const EmbeddingR3& w, const QuadMotion& q) {
  if (static_cast<int>(w.size()) != g.n()) throw PreconditionError("motion_from_embedding: size mismatch");
  for (const Rational& s : q.norms_sq)
    if (sgn(s) <= 0) throw MotionError("motion_from_embedding: frame norms must be positive");
  std::optional<std::pair<int, int>> pin;
  for (const Edge& e : g.edges()) {
    const Vec3Q d{w[e.v][0] - w[e.u][0], w[e.v][1] - w[e.u][1], w[e.v][2] - w[e.u][2]};
    Rational scale;
    const auto cls = classify_direction(d, &scale);
    if (!cls) {
      throw MotionError("motion_from_embedding: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " is not parallel to a frame direction");
    }
    if (*cls == 0 && !pin) pin = sgn(scale) > 0 ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u);
  }
  if (!pin) throw MotionError("motion_from_embedding: no edge in direction (1,0,0)");
  std::vector<RationalFunction> x;
  std::vector<RationalFunction> y;
  for (int v = 0; v < g.n(); ++v) {
    RationalFunction px;
    RationalFunction py;
    for (int k = 0; k < 3; ++k) {
      const RationalFunction c{Gaussian(w[v][k])};
      px = px + c * q.frame[k].x;
      py = py + c * q.frame[k].y;
    }
    x.push_back(px);
    y.push_back(py);
  }
  return pinned_motion(g, x, y, pin->first, pin->second);
}

struct TwoNacConstruction {
  Coloring first;
  Coloring second;
  EmbeddingR3 embedding;
  ParametrizedMotion motion;
  Labeling labeling;
};

inline TwoNacConstruction two_nac_construction(const Graph& g, const Coloring& d1, const Coloring& d2,
                                               std::uint64_t seed = 1) {
  TwoNacConstruction out{d1, d2, two_nac_embedding(g, d1, d2, seed), {}, {}};
  out.motion = motion_from_embedding(g, out.embedding, deltoid_motion());
  out.labeling = verify_compatibility(out.motion).labeling;
  return out;
}

// Blue where the two colourings agree.
inline Coloring agreement_coloring(const Coloring& d1, const Coloring& d2) {
  Coloring out(d1.size());
  for (std::size_t k = 0; k < d1.size(); ++k) out[k] = d1[k] == d2[k] ? Color::blue : Color::red;
  return out;
}

inline nlohmann::json embedding_to_json(const EmbeddingR3& w) {
  nlohmann::json v = nlohmann::json::object();
  for (std::size_t i = 0; i < w.size(); ++i)
    v[std::to_string(i)] = {w[i][0].get_str(), w[i][1].get_str(), w[i][2].get_str()};
  return {{"v", v}};
}

}  // namespace flexrig
