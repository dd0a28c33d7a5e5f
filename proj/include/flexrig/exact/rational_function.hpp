#pragma once

#include <optional>
#include <string>

#include "flexrig/exact/polynomial.hpp"

namespace flexrig {

// num/den over Q(i) with den monic and gcd(num, den) = 1. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(Gaussian c) : num_(std::move(c)), den_(1) {}
  RationalFunction(int c) : RationalFunction(Gaussian(c)) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction t() { return RationalFunction(Poly::t()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Constant value, if the function is constant.
  std::optional<Gaussian> constant() const {
    if (!is_constant()) return std::nullopt;
    return num_.coeff(0);
  }
  bool is_real() const { return num_.is_real() && den_.is_real(); }

  // Coefficient-wise conjugate; equals the complex conjugate for real t.
  RationalFunction conj() const { return {num_.conj(), den_.conj()}; }

  // Value at x, or nullopt at a pole.
  std::optional<Gaussian> operator()(const Gaussian& x) const {
    const Gaussian d = den_(x);
    if (d.is_zero()) return std::nullopt;
    return num_(x) / d;
  }

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw PreconditionError("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    auto poly_str = [](const Poly& p) {
      if (p.is_zero()) return std::string("0");
      std::string s;
      for (int k = p.degree(); k >= 0; --k) {
        const Gaussian& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        if (!c.is_real() && k > 0) cs = "(" + cs + ")";
        if (!s.empty()) s += " + ";
        if (k == 0) {
          s += cs;
        } else {
          if (cs != "1") s += (cs == "-1" ? "-" : cs + "*");
          s += k == 1 ? "t" : "t^" + std::to_string(k);
        }
      }
      return s;
    };
    if (den_.degree() == 0) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const Gaussian lead = den_.lead();
    if (!(lead == Gaussian(1))) {
      const Poly inv(Gaussian(1) / lead);
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace flexrig
