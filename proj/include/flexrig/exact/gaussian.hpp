#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "flexrig/errors.hpp"

namespace flexrig {

using Rational = mpq_class;

// "p/q" with q > 0, always carrying the denominator.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p", "p/q" and a leading sign; rejects a zero denominator.
inline Rational parse_fraction(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty fraction");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t k = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (k == part.size()) return false;
    for (; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') return false;
    }
    return true;
  };
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed fraction: " + s);
  }
  mpz_class p(num[0] == '+' ? num.substr(1) : num);
  mpz_class q(den);
  if (q == 0) throw ParseError("zero denominator in fraction: " + s);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Element of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}
  Gaussian(int r) : re(r) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    const Rational n = o.norm();
    if (sgn(n) == 0) throw PreconditionError("division by zero in Q(i)");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

  std::complex<long double> to_complex() const {
    return {static_cast<long double>(re.get_d()), static_cast<long double>(im.get_d())};
  }

  std::string to_string() const {
    if (sgn(im) == 0) return re.get_str();
    if (sgn(re) == 0) return im == 1 ? "i" : im == -1 ? "-i" : im.get_str() + "i";
    const Rational mag = abs(im);
    const std::string tail = mag == 1 ? "i" : mag.get_str() + "i";
    return re.get_str() + (sgn(im) > 0 ? "+" : "-") + tail;
  }
};

}  // namespace flexrig
