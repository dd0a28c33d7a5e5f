#pragma once

#include <string>
#include <vector>

#include "flexrig/constructions/deltoid.hpp"
#include "flexrig/motion.hpp"

namespace flexrig {

// S5 with labels 1..8 as 0..7.
inline Graph s5_graph() {
  const std::vector<std::pair<int, int>> pairs = {{1, 4}, {2, 6}, {3, 7}, {2, 3}, {1, 2}, {1, 3}, {4, 6},
                                                  {4, 7}, {6, 8}, {7, 8}, {1, 5}, {4, 5}, {5, 8}};
  std::vector<Edge> es;
  for (auto [u, v] : pairs) es.emplace_back(u - 1, v - 1);
  return Graph(8, es);
}

struct S5Construction {
  Rational a;
  ParametrizedMotion motion;
  Labeling labeling;
  InjectivityReport injectivity;
};

// Closed-form motion with vertex 4 at (cos, sin) of the rational circle
// parameter u; lambda(1,4) = 1 and lambda(1,2) = a.
inline S5Construction s5_motion(const Rational& a) {
  if (a <= 1) throw PreconditionError("s5_motion: need a > 1");
  const RationalFunction A{Gaussian(a)};
  const RationalFunction one(1);
  const RationalFunction two(2);
  const RationalFunction cs(int_poly({1, 0, -1}), int_poly({1, 0, 1}));
  const RationalFunction sn(int_poly({0, 2}), int_poly({1, 0, 1}));
  const RationalFunction a2 = A * A;
  const RationalFunction a2m1 = a2 - one;

  std::vector<RationalFunction> x(8);
  std::vector<RationalFunction> y(8);
  x[1] = -A;
  x[2] = A;
  x[3] = cs;
  y[3] = sn;
  const RationalFunction d6 = a2 + two * A * cs + one;
  const RationalFunction d7 = a2 - two * A * cs + one;
  x[5] = -(a2 * A + a2m1 * cs - A) / d6;
  y[5] = -a2m1 * sn / d6;
  x[6] = (a2 * A - a2m1 * cs - A) / d7;
  y[6] = -a2m1 * sn / d7;
  const RationalFunction r5 = -a2m1 / (a2 + one);
  x[4] = r5 * cs;
  y[4] = r5 * sn;
  const RationalFunction d8 = a2m1 * a2m1 + RationalFunction(4) * a2 * sn * sn;
  x[7] = (a2m1 * a2m1 - RationalFunction(4) * a2 * sn * sn) * cs / d8;
  y[7] = -(RationalFunction(3) * a2 * a2 - RationalFunction(4) * a2 * cs * cs + two * a2 - one) * sn / d8;

  S5Construction out;
  out.a = a;
  out.motion = pinned_motion(s5_graph(), x, y, 0, 2);
  out.labeling = verify_compatibility(out.motion).labeling;
  out.injectivity = verify_injectivity(out.motion);
  if (!out.injectivity.proper) {
    const Edge& e = out.injectivity.coinciding.front();
    throw PreconditionError("s5_motion: a = " + a.get_str() + " makes vertices " + std::to_string(e.u) + " and " +
                            std::to_string(e.v) + " coincide");
  }
  return out;
}

}  // namespace flexrig
