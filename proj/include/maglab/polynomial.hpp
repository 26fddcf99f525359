#pragma once

// Complex polynomials (ascending coefficients), simultaneous root finding,
// and rational functions with a monic denominator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "maglab/common.hpp"

namespace maglab {

template <class T = double>
class Polynomial {
 public:
  using Complex = std::complex<T>;

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial from_roots(const std::vector<Complex>& roots, Complex lead = Complex(1)) {
    std::vector<Complex> c{lead};
    for (const auto& r : roots) {
      std::vector<Complex> next(c.size() + 1, Complex(0));
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= r * c[k];
      }
      c = std::move(next);
    }
    return Polynomial(std::move(c));
  }

  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return c_; }
  Complex leading() const { return c_.empty() ? Complex(0) : c_.back(); }

  Complex operator()(const Complex& z) const {
    Complex s(0);
    for (std::size_t k = c_.size(); k-- > 0;) s = s * z + c_[k];
    return s;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Complex(T(k));
    return Polynomial(std::move(d));
  }

  /// Divides by (z - r), discarding the remainder.
  Polynomial deflate(const Complex& r) const {
    if (c_.size() <= 1) return {};
    std::vector<Complex> q(c_.size() - 1);
    Complex carry(0);
    for (std::size_t k = c_.size(); k-- > 1;) {
      carry = carry * r + c_[k];
      q[k - 1] = carry;
    }
    return Polynomial(std::move(q));
  }

  Polynomial scaled(const Complex& s) const {
    auto c = c_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  /// p(center + radius t) as a polynomial in t.
  Polynomial substituted(const Complex& center, const Complex& radius) const {
    // Horner in polynomial arithmetic: acc = acc * (center + radius t) + c_k.
    std::vector<Complex> acc;
    for (std::size_t k = c_.size(); k-- > 0;) {
      std::vector<Complex> next(acc.size() + 1, Complex(0));
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i] * center;
        next[i + 1] += acc[i] * radius;
      }
      next[0] += c_[k];
      acc = std::move(next);
    }
    return Polynomial(std::move(acc));
  }

  template <class U>
  Polynomial<U> cast() const {
    std::vector<std::complex<U>> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.emplace_back(static_cast<U>(v.real()), static_cast<U>(v.imag()));
    return Polynomial<U>(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Complex(0)) c_.pop_back();
  }
  std::vector<Complex> c_;
};

struct RootOptions {
  int max_iterations = 2000;
};

/// All roots by the Aberth-Ehrlich iteration, then one Newton polish per
/// root. Converged when every correction is below ~eps relative.
template <class T>
std::vector<std::complex<T>> polynomial_roots(const Polynomial<T>& p, const RootOptions& opt = {}) {
  using Complex = std::complex<T>;
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  const int n = p.degree();
  if (n < 0) throw ArgumentError("polynomial_roots: zero polynomial");
  if (n == 0) return {};
  const auto& c = p.coefficients();
  const Polynomial<T> dp = p.derivative();

  // Initial guesses on a circle whose radius bounds the root moduli
  // (geometric mean of the Fujiwara-style terms).
  T radius(0);
  for (int k = 0; k < n; ++k) {
    const T q = abs(c[k] / c[n]);
    if (q > T(0)) radius = std::max<T>(radius, pow(q, T(1) / T(n - k)));
  }
  if (radius == T(0)) return std::vector<Complex>(n, Complex(0));
  const T pi = pi_value<T>();
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const T ang = T(2) * pi * T(k) / T(n) + T(0.4);
    z[k] = Complex(radius * cos(ang), radius * sin(ang));
  }
  const T eps = std::numeric_limits<T>::epsilon();
  for (int it = 0; it < opt.max_iterations; ++it) {
    T worst(0);
    for (int k = 0; k < n; ++k) {
      const Complex pv = p(z[k]);
      if (pv == Complex(0)) continue;
      const Complex ratio = pv / dp(z[k]);
      Complex s(0);
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      const Complex w = ratio / (Complex(1) - ratio * s);
      z[k] -= w;
      worst = std::max<T>(worst, abs(w) / std::max<T>(T(1), abs(z[k])));
    }
    if (worst < T(16) * eps) break;
  }
  for (auto& r : z) {
    const Complex d = dp(r);
    if (d != Complex(0)) r -= p(r) / d;
  }
  return z;
}

/// num / den with den monic. Coefficients ascending in R.
template <class T = double>
struct RationalFunction {
  using Complex = std::complex<T>;
  Polynomial<T> num;
  Polynomial<T> den{std::vector<Complex>{Complex(1)}};

  Complex operator()(const Complex& z) const { return num(z) / den(z); }

  void normalize() {
    const Complex lead = den.leading();
    if (lead == Complex(0)) throw ArgumentError("RationalFunction: zero denominator");
    num = num.scaled(Complex(1) / lead);
    den = den.scaled(Complex(1) / lead);
  }

  template <class U>
  RationalFunction<U> cast() const {
    RationalFunction<U> r;
    r.num = num.template cast<U>();
    r.den = den.template cast<U>();
    return r;
  }
};

}  // namespace maglab
