#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "flexrig/exact/polynomial.hpp"

namespace flexrig {

struct GaussianRoots {
  // Distinct roots in Q(i), in discovery order.
  std::vector<Gaussian> roots;
  // Monic square-free factor with no root in Q(i); 1 when everything resolved.
  Poly unresolved = Poly(1);
};

namespace detail {

using cld = std::complex<long double>;

// Aberth-Ehrlich iteration followed by Newton polishing.
inline std::vector<cld> numeric_roots(const Poly& p) {
  const int d = p.degree();
  std::vector<cld> a(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) a[k] = p.coeff(k).to_complex();
  const cld lead = a[d];
  for (auto& x : a) x /= lead;
  auto eval = [&](cld z, cld& deriv) {
    cld v = a[d];
    deriv = 0;
    for (int k = d - 1; k >= 0; --k) {
      deriv = deriv * z + v;
      v = v * z + a[k];
    }
    return v;
  };
  long double radius = 0;
  for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(a[k]));
  radius = 1 + radius;
  std::vector<cld> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const long double ang = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[k] = std::polar(radius * 0.5L, ang);
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double moved = 0;
    for (int k = 0; k < d; ++k) {
      cld deriv;
      const cld v = eval(z[k], deriv);
      if (v == cld(0)) continue;
      const cld ratio = v / deriv;
      cld sum = 0;
      for (int j = 0; j < d; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      const cld step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      moved = std::max(moved, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (moved < 1e-17L) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 8; ++k) {
      cld deriv;
      const cld v = eval(r, deriv);
      if (deriv == cld(0)) break;
      r -= v / deriv;
    }
  }
  return z;
}

inline mpz_class common_denominator(const Poly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im.get_den_mpz_t());
  }
  return den;
}

inline mpz_class round_to_integer(long double x) {
  mpz_class out;
  const long double r = std::round(x);
  mpz_set_d(out.get_mpz_t(), static_cast<double>(r));
  return out;
}

}  // namespace detail

// Roots of p in Q(i). For monic p with coefficient denominator D, every
// root r in Q(i) has D*r in Z[i], so numeric approximations are rounded on
// that lattice and confirmed exactly.
inline GaussianRoots gaussian_rational_roots(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
  GaussianRoots out;
  Poly q = squarefree_part(p);
  for (int round = 0; round < 4 && q.degree() >= 1; ++round) {
    const mpz_class den = detail::common_denominator(q);
    const long double scale = static_cast<long double>(den.get_d());
    bool found = false;
    for (const auto& z : detail::numeric_roots(q)) {
      if (q.degree() < 1) break;
      const mpz_class cx = detail::round_to_integer(z.real() * scale);
      const mpz_class cy = detail::round_to_integer(z.imag() * scale);
      for (int dx = -1; dx <= 1; ++dx) {
        bool hit = false;
        for (int dy = -1; dy <= 1 && !hit; ++dy) {
          Gaussian cand(Rational(mpz_class(cx + dx), den), Rational(mpz_class(cy + dy), den));
          cand.re.canonicalize();
          cand.im.canonicalize();
          if (q(cand).is_zero()) {
            out.roots.push_back(cand);
            q = q / Poly::linear(cand);
            hit = found = true;
          }
        }
        if (hit) break;
      }
    }
    if (!found) break;
  }
  out.unresolved = q.degree() >= 1 ? q.monic() : Poly(1);
  return out;
}

}  // namespace flexrig
