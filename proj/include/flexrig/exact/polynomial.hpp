#pragma once

#include <utility>
#include <vector>

#include "flexrig/exact/gaussian.hpp"

namespace flexrig {

// Univariate polynomial over Q(i); coefficients from degree 0 upwards with no
// trailing zeros. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(Gaussian c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  Poly(int c) : Poly(Gaussian(c)) {}
  explicit Poly(std::vector<Gaussian> coeffs) : c_(std::move(coeffs)) { trim(); }

  // t - root
  static Poly linear(const Gaussian& root) { return Poly(std::vector<Gaussian>{-root, Gaussian(1)}); }
  static Poly t() { return Poly(std::vector<Gaussian>{Gaussian(0), Gaussian(1)}); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Gaussian>& coeffs() const { return c_; }
  Gaussian coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Gaussian(); }
  const Gaussian& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_real() const {
    for (const auto& x : c_)
      if (!x.is_real()) return false;
    return true;
  }

  Gaussian operator()(const Gaussian& x) const {
    Gaussian acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Conjugates every coefficient.
  Poly conj() const {
    std::vector<Gaussian> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.conj());
    return Poly(std::move(out));
  }

  Poly derivative() const {
    std::vector<Gaussian> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Gaussian(static_cast<long>(k)));
    return Poly(std::move(out));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const Gaussian inv = Gaussian(1) / lead();
    return *this * Poly(inv);
  }

  Poly operator-() const {
    std::vector<Gaussian> out;
    for (const auto& x : c_) out.push_back(-x);
    return Poly(std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Gaussian> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Gaussian> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Gaussian> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Gaussian> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Gaussian inv = Gaussian(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
      if (rem[k].is_zero()) continue;
      const Gaussian f = rem[k] * inv;
      q[k - db] = f;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
    return q;
  }

  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Gaussian> c_;
};

// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// Product of the distinct irreducible factors, monic.
inline Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly(1);
  return (p / gcd(p, p.derivative())).monic();
}

// Multiplicity of root x in p (p nonzero).
inline int root_multiplicity(Poly p, const Gaussian& x) {
  if (p.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
  int m = 0;
  const Poly lin = Poly::linear(x);
  while (p.degree() >= 1 && p(x).is_zero()) {
    p = p / lin;
    ++m;
  }
  return m;
}

}  // namespace flexrig
