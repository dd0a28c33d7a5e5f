#pragma once

#include <array>
#include <initializer_list>

#include "flexrig/motion.hpp"

namespace flexrig {

// Real polynomial from integer coefficients, lowest degree first.
inline Poly int_poly(std::initializer_list<long> coeffs) {
  std::vector<Gaussian> c;
  for (long x : coeffs) c.emplace_back(Rational(x));
  return Poly(std::move(c));
}

struct Vec2F {
  RationalFunction x;
  RationalFunction y;
};

// Parametrized 4-cycle 0-1-2-3 with the frame vectors
// f1 = p1 - p0, f2 = p2 - p1, f3 = p3 - p2.
struct QuadMotion {
  ParametrizedMotion motion;
  std::array<Vec2F, 3> frame;
  // |f1|^2, |f2|^2, |f3|^2, |f1+f2+f3|^2.
  std::array<Rational, 4> norms_sq;
};

inline QuadMotion quad_motion_from(const ParametrizedMotion& m) {
  if (m.graph != cycle_graph(4)) throw PreconditionError("quad motion must be on the 4-cycle 0-1-2-3");
  QuadMotion q;
  q.motion = m;
  for (int k = 0; k < 3; ++k) q.frame[k] = {m.x[k + 1] - m.x[k], m.y[k + 1] - m.y[k]};
  const Vec2F sum{m.x[3] - m.x[0], m.y[3] - m.y[0]};
  auto norm_sq = [](const Vec2F& f) {
    const auto c = (f.x * f.x + f.y * f.y).constant();
    if (!c) throw MotionError("quad motion: frame vector length is not constant");
    return c->re;
  };
  for (int k = 0; k < 3; ++k) q.norms_sq[k] = norm_sq(q.frame[k]);
  q.norms_sq[3] = norm_sq(sum);
  return q;
}

// The deltoid with side lengths a, 3a, 3a, a: vertices 0 and 1 fixed at
// (0,0) and (a,0), the others on rational curves in t.
inline QuadMotion deltoid_motion(const Rational& a = 1) {
  if (sgn(a) <= 0) throw PreconditionError("deltoid_motion: scale must be positive");
  const RationalFunction s{Gaussian(a)};
  ParametrizedMotion m;
  m.graph = cycle_graph(4);
  m.fixed_u = 0;
  m.fixed_v = 1;
  m.x = {RationalFunction(0), s,
         s * RationalFunction(int_poly({-8, 0, 4}), int_poly({4, 0, 1})),
         s * RationalFunction(int_poly({4, 0, -13, 0, 1}), int_poly({4, 0, 5, 0, 1}))};
  m.y = {RationalFunction(0), RationalFunction(0),
         s * RationalFunction(int_poly({0, 12}), int_poly({4, 0, 1})),
         s * RationalFunction(int_poly({0, -12, 0, 6}), int_poly({4, 0, 5, 0, 1}))};
  return quad_motion_from(m);
}

}  // namespace flexrig
