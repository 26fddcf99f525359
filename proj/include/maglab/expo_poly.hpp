#pragma once

// Exponential-Laurent polynomials in the radial variable r,
//
//   p(r) = sum c_{k,s} r^k exp(s R r),   k in Z, s in {-1, 0, +1},
//
// at one fixed complex rate R. Radial kernels of (R^2 - Delta)^m in odd
// dimensions live in this class, so every operator below is exact at the
// coefficient level: no quadrature, no finite differences.
//
// The real type T is a template parameter so that the same algebra runs in
// double and in extended precision (boost::multiprecision).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "maglab/common.hpp"

namespace maglab {

/// Relative tolerance below which a merged coefficient is an exact zero.
template <class T>
T canonical_tolerance() {
  if constexpr (std::is_same_v<T, double>) {
    return T(1e-14);
  } else {
    using std::pow;
    return pow(T(10), -(std::numeric_limits<T>::digits10 - 2));
  }
}

template <class T = double>
class ExpoPoly {
 public:
  using Complex = std::complex<T>;
  // (mode s, power k)
  using Key = std::pair<int, int>;

  ExpoPoly() = default;
  explicit ExpoPoly(Complex rate) : rate_(rate) {}

  /// c r^k exp(s R r)
  static ExpoPoly monomial(Complex rate, Complex coeff, int power, int mode) {
    ExpoPoly p(rate);
    p.add_term(coeff, power, mode);
    return p;
  }

  const Complex& rate() const { return rate_; }
  const std::map<Key, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex coefficient(int power, int mode) const {
    auto it = terms_.find({mode, power});
    return it == terms_.end() ? Complex(0) : it->second;
  }

  int min_power() const {
    int k = std::numeric_limits<int>::max();
    for (const auto& [key, c] : terms_) k = std::min(k, key.second);
    return k;
  }
  int max_power() const {
    int k = std::numeric_limits<int>::min();
    for (const auto& [key, c] : terms_) k = std::max(k, key.second);
    return k;
  }

  /// Largest coefficient modulus (0 for the zero polynomial).
  T max_abs_coefficient() const {
    T m(0);
    for (const auto& [key, c] : terms_) {
      using std::abs;
      m = std::max<T>(m, abs(c));
    }
    return m;
  }

  ExpoPoly& operator+=(const ExpoPoly& o) {
    check_rate(o);
    Accumulator acc(*this);
    for (const auto& [key, c] : o.terms_) acc.add(key, c);
    *this = acc.finish(rate_);
    return *this;
  }
  ExpoPoly& operator-=(const ExpoPoly& o) { return *this += o * Complex(-1); }
  ExpoPoly& operator*=(const Complex& s) {
    if (s == Complex(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
  }

  friend ExpoPoly operator+(ExpoPoly a, const ExpoPoly& b) { return a += b; }
  friend ExpoPoly operator-(ExpoPoly a, const ExpoPoly& b) { return a -= b; }
  friend ExpoPoly operator*(ExpoPoly a, const Complex& s) { return a *= s; }
  friend ExpoPoly operator*(const Complex& s, ExpoPoly a) { return a *= s; }

  /// Multiplies by r^shift.
  ExpoPoly shifted_power(int shift) const {
    ExpoPoly p(rate_);
    for (const auto& [key, c] : terms_) p.terms_[{key.first, key.second + shift}] = c;
    return p;
  }

  /// Value at r > 0, multiplied by exp(-log_scale). For |R r| < 1e-4 the
  /// exponentials are expanded in series and the Laurent coefficients
  /// collected first, so sinh-type combinations cancel exactly instead of
  /// catastrophically.
  Complex evaluate(const T& r, const T& log_scale = T(0)) const {
    if (!(r > T(0))) throw ArgumentError("ExpoPoly::evaluate: r must be positive");
    using std::abs;
    using std::exp;
    using std::pow;
    bool mixed = false;
    for (const auto& [key, c] : terms_) mixed = mixed || key.first != 0;
    if (mixed && abs(rate_ * r) < T(1e-4)) {
      Complex v = evaluate_series(r);
      return log_scale == T(0) ? v : v * Complex(exp(-log_scale));
    }
    Complex sum(0);
    const Complex shift(-log_scale);
    for (const auto& [key, c] : terms_) {
      Complex term = c * Complex(pow(r, key.second));
      if (key.first != 0)
        term *= exp(Complex(T(key.first)) * rate_ * r + shift);
      else if (log_scale != T(0))
        term *= Complex(exp(-log_scale));
      sum += term;
    }
    return sum;
  }

  /// max over present modes s of Re(s R r): exp of it bounds the terms.
  T dominant_exponent(const T& r) const {
    bool any = false;
    T best(0);
    for (const auto& [key, c] : terms_) {
      const T e = T(key.first) * rate_.real() * r;
      if (!any || e > best) best = e;
      any = true;
    }
    return best;
  }

  std::string dump() const {
    std::ostringstream os;
    os.precision(17);
    for (const auto& [key, c] : terms_) os << c << ' ' << key.second << ' ' << key.first << '\n';
    return os.str();
  }

  void add_term(const Complex& coeff, int power, int mode) {
    if (mode < -1 || mode > 1) throw ArgumentError("ExpoPoly: mode must be -1, 0 or +1");
    Accumulator acc(*this);
    acc.add({mode, power}, coeff);
    *this = acc.finish(rate_);
  }

  // Coefficient accumulation that remembers the largest contribution to each
  // slot, so cancellation down to roundoff is detected as an exact zero.
  class Accumulator {
   public:
    Accumulator() = default;
    explicit Accumulator(const ExpoPoly& seed) {
      for (const auto& [key, c] : seed.terms_) add(key, c);
    }
    void add(const Key& key, const Complex& c) {
      using std::abs;
      auto& slot = slots_[key];
      slot.first += c;
      slot.second = std::max<T>(slot.second, abs(c));
    }
    ExpoPoly finish(const Complex& rate) const {
      ExpoPoly p(rate);
      const T tol = canonical_tolerance<T>();
      for (const auto& [key, v] : slots_) {
        using std::abs;
        if (v.second == T(0)) continue;
        if (abs(v.first) <= tol * v.second) continue;
        p.terms_.emplace(key, v.first);
      }
      return p;
    }

   private:
    std::map<Key, std::pair<Complex, T>> slots_;
  };

 private:
  void check_rate(const ExpoPoly& o) const {
    if (o.terms_.empty() || terms_.empty()) return;
    if (o.rate_ != rate_) throw ArgumentError("ExpoPoly: rates differ");
  }

  Complex evaluate_series(const T& r) const {
    using std::abs;
    using std::pow;
    const int depth = 12 + (max_power() - min_power());
    std::map<int, std::pair<Complex, T>> laurent;
    for (const auto& [key, c] : terms_) {
      Complex sr = Complex(T(key.first)) * rate_;
      Complex factor(1);
      for (int q = 0; q <= (key.first == 0 ? 0 : depth); ++q) {
        if (q > 0) factor *= sr / Complex(T(q));
        const Complex contrib = c * factor;
        auto& slot = laurent[key.second + q];
        slot.first += contrib;
        slot.second = std::max<T>(slot.second, abs(contrib));
      }
    }
    const T tol = canonical_tolerance<T>();
    Complex sum(0);
    for (const auto& [k, v] : laurent) {
      if (abs(v.first) <= tol * v.second) continue;
      sum += v.first * Complex(pow(r, k));
    }
    return sum;
  }

  Complex rate_{1};
  std::map<Key, Complex> terms_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const ExpoPoly<T>& p) {
  return os << p.dump();
}

/// d/dr, termwise: c r^k e^{sRr} -> c k r^{k-1} e^{sRr} + c s R r^k e^{sRr}.
template <class T>
ExpoPoly<T> differentiate(const ExpoPoly<T>& p) {
  using Complex = std::complex<T>;
  typename ExpoPoly<T>::Accumulator acc;
  for (const auto& [key, c] : p.terms()) {
    const auto [s, k] = key;
    if (k != 0) acc.add({s, k - 1}, c * Complex(T(k)));
    if (s != 0) acc.add({s, k}, c * Complex(T(s)) * p.rate());
  }
  return acc.finish(p.rate());
}

/// Odd dimension n = 2m - 1 >= 3 with rate R.
template <class T = double>
struct RadialOperatorSpec {
  int n = 3;
  std::complex<T> rate{1};

  RadialOperatorSpec() = default;
  RadialOperatorSpec(int dim, std::complex<T> r) : n(dim), rate(r) {}

  int m() const { return (n + 1) / 2; }
  void validate() const {
    if (n < 3 || n % 2 == 0)
      throw ArgumentError("radial operator: dimension must be odd and >= 3, got " +
                          std::to_string(n));
  }
};

/// (R^2 - d^2/dr^2 - (n-1) r^{-1} d/dr) p, the radial part of R^2 - Delta
/// in R^n.
template <class T>
ExpoPoly<T> helmholtz_apply(const ExpoPoly<T>& p, int n) {
  using Complex = std::complex<T>;
  const Complex R = p.rate();
  const ExpoPoly<T> d1 = differentiate(p);
  const ExpoPoly<T> d2 = differentiate(d1);
  typename ExpoPoly<T>::Accumulator acc;
  for (const auto& [key, c] : p.terms()) acc.add(key, c * R * R);
  for (const auto& [key, c] : d2.terms()) acc.add(key, -c);
  const Complex w = Complex(T(-(n - 1)));
  for (const auto& [key, c] : d1.terms()) acc.add({key.first, key.second - 1}, c * w);
  return acc.finish(R);
}

template <class T>
ExpoPoly<T> helmholtz_apply(const ExpoPoly<T>& p, const RadialOperatorSpec<T>& spec) {
  return helmholtz_apply(p, spec.n);
}

template <class T>
ExpoPoly<T> helmholtz_power(ExpoPoly<T> p, int n, int times) {
  for (int i = 0; i < times; ++i) p = helmholtz_apply(p, n);
  return p;
}

/// Largest coefficient of (R^2 - Delta_n)^times p, relative to the largest
/// coefficient met along the way. Roundoff level for kernel elements.
template <class T>
T annihilation_residual(const ExpoPoly<T>& p, int n, int times) {
  T scale = p.max_abs_coefficient();
  ExpoPoly<T> v = p;
  for (int i = 0; i < times; ++i) {
    v = helmholtz_apply(v, n);
    scale = std::max<T>(scale, v.max_abs_coefficient());
  }
  return scale == T(0) ? T(0) : v.max_abs_coefficient() / scale;
}

/// -r^{-1} d/dr. Intertwines the radial operators of dimensions n and n+2:
/// (R^2 - Delta_{n+2}) shift = shift (R^2 - Delta_n).
template <class T>
ExpoPoly<T> dimension_shift(const ExpoPoly<T>& p) {
  return differentiate(p).shifted_power(-1) * std::complex<T>(T(-1));
}

/// Exponentially decaying radial kernel of (R^2 - Delta_n)^m:
/// { shift^{m-2}(r^{j-1} e^{-Rr}) : j = 0..m-1 }.
template <class T>
std::vector<ExpoPoly<T>> decaying_basis(const RadialOperatorSpec<T>& spec) {
  spec.validate();
  const int m = spec.m();
  std::vector<ExpoPoly<T>> basis;
  basis.reserve(m);
  for (int j = 0; j < m; ++j) {
    auto p = ExpoPoly<T>::monomial(spec.rate, std::complex<T>(1), j - 1, -1);
    for (int s = 0; s < m - 2; ++s) p = dimension_shift(p);
    basis.push_back(std::move(p));
  }
  return basis;
}

/// Radial kernel of (R^2 - Delta_3)^m smooth at r = 0:
/// v_j = r^{j-1} sinh(Rr) for even j, r^{j-1} cosh(Rr) for odd j.
template <class T>
std::vector<ExpoPoly<T>> regular_basis_3d(int m, std::complex<T> rate) {
  if (m < 1) throw ArgumentError("regular_basis_3d: m must be >= 1");
  using Complex = std::complex<T>;
  const Complex half(T(1) / T(2));
  std::vector<ExpoPoly<T>> basis;
  basis.reserve(m);
  for (int j = 0; j < m; ++j) {
    const Complex minus_sign = (j % 2 == 0) ? -half : half;
    ExpoPoly<T> p(rate);
    p.add_term(half, j - 1, +1);
    p.add_term(minus_sign, j - 1, -1);
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace maglab
