#pragma once

// Rational reconstruction of M_{B_n}: fit num/den to exact samples taken on
// a circle in the right half-plane, then strip common factors.
//
// The fit is linearized, N(t) - f(t) D(t) = 0 with t = (R - c)/rho on the
// unit circle, D(0) = 1, rows weighted by 1/|f|. deg D is the smallest value
// in [0, (n-1)(n-3)/8] whose fit reproduces held-out samples off the
// contour; deg N = deg D + n. Everything runs in MPFR precision because the
// pole/zero locations for n ~ 20 need 40+ significant digits in the samples.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "maglab/common.hpp"
#include "maglab/dense.hpp"
#include "maglab/parallel.hpp"
#include "maglab/polynomial.hpp"
#include "maglab/precision.hpp"
#include "maglab/radial_exact.hpp"

namespace maglab {

inline int ball_pole_bound(int n) { return (n - 1) * (n - 3) / 8; }
inline int ball_zero_bound(int n) { return (n + 3) * (n + 1) / 8; }

struct Contour {
  cplx center{0.0, 0.0};
  double radius = 0.0;

  void validate() const {
    if (!(radius > 0.0)) throw ArgumentError("contour: radius must be positive");
    if (!(center.real() - radius > 0.0))
      throw ArgumentError("contour: circle must lie in the right half-plane");
  }
};

/// Circle of radius n - 1 centred at n: touches [1, 2n - 1] on the real axis.
inline Contour default_contour(int n) {
  const double rho = std::max(1.0, static_cast<double>(n - 1));
  return {cplx(rho + 1.0, 0.0), rho};
}

inline int minimum_sample_count(int n) { return 2 * ball_pole_bound(n) + n + 2; }

struct ReconstructionOptions {
  int samples = 0;  // 0: twice the minimum
  int heldout = 12;
  double heldout_tolerance = 1e-8;
  double common_root_tolerance = 1e-8;
  Contour contour;  // radius 0: default_contour(n)
};

struct Reconstruction {
  int n = 3;
  RationalFunction<double> model;
  std::vector<cplx> poles;  // roots of model.den after common-factor removal
  std::vector<cplx> zeros;  // roots of model.num
  // |p(z)| / sum |c_k| |z|^k at each root, in the working precision
  std::vector<double> pole_residuals, zero_residuals;
  int removed_common = 0;
  double heldout_residual = 0.0;
  int digits = 15;
  int samples = 0;
  Contour contour;
};

namespace detail {

template <class T>
struct RationalFitT {
  Polynomial<T> num, den;  // in t
};

template <class T>
RationalFitT<T> linearized_fit(const std::vector<std::complex<T>>& t, const std::vector<std::complex<T>>& f,
                              int dd, int dn) {
  using Complex = std::complex<T>;
  using std::abs;
  const std::size_t rows = t.size();
  const std::size_t cols = static_cast<std::size_t>(dn + 1 + dd);
  dense::Matrix<T> a(rows, cols);
  std::vector<Complex> b(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Complex w = Complex(T(1) / abs(f[i]));
    Complex p(1);
    for (int k = 0; k <= std::max(dn, dd); ++k) {
      if (k <= dn) a(i, k) = w * p;
      if (k >= 1 && k <= dd) a(i, dn + k) = -w * f[i] * p;
      p *= t[i];
    }
    b[i] = w * f[i];  // D(0) = 1 moved to the right-hand side
  }
  const auto x = dense::least_squares(a, b);
  std::vector<Complex> nc(x.begin(), x.begin() + dn + 1);
  std::vector<Complex> dc{Complex(1)};
  dc.insert(dc.end(), x.begin() + dn + 1, x.end());
  return {Polynomial<T>(nc), Polynomial<T>(dc)};
}

template <class T>
T heldout_error(const RationalFitT<T>& fit, const std::vector<std::complex<T>>& t,
                const std::vector<std::complex<T>>& f) {
  using std::abs;
  T worst(0);
  for (std::size_t i = 0; i < t.size(); ++i)
    worst = std::max<T>(worst, abs(fit.num(t[i]) / fit.den(t[i]) - f[i]) / abs(f[i]));
  return worst;
}

template <class T>
std::vector<std::complex<T>> ball_samples(int n, const std::vector<std::complex<T>>& rates) {
  std::vector<std::complex<T>> f(rates.size());
  const TraceOptions<T> opt;
  parallel_for(rates.size(), [&](std::size_t i) { f[i] = ball_magnitude<T>(n, rates[i], T(1), opt); });
  return f;
}

// Pairs of (num root, den root) closer than tol, greedy by distance.
template <class T>
int strip_common(std::vector<std::complex<T>>& zeros, std::vector<std::complex<T>>& poles, double tol) {
  int removed = 0;
  for (;;) {
    double best = tol;
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = 0; i < zeros.size(); ++i)
      for (std::size_t j = 0; j < poles.size(); ++j) {
        using std::abs;
        const double d = static_cast<double>(abs(zeros[i] - poles[j])) /
                         std::max(1.0, static_cast<double>(abs(poles[j])));
        if (d <= best) {
          best = d;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return removed;
    zeros.erase(zeros.begin() + bi);
    poles.erase(poles.begin() + bj);
    ++removed;
  }
}

template <class T>
std::optional<Reconstruction> reconstruct_at(int n, const ReconstructionOptions& opt, const Contour& contour,
                                             int samples) {
  using Complex = std::complex<T>;
  const T pi = pi_value<T>();
  const Complex c = widen<T>(contour.center);
  const T rho(contour.radius);

  std::vector<Complex> t(samples), rates(samples);
  for (int k = 0; k < samples; ++k) {
    using std::cos;
    using std::sin;
    const T ang = T(2) * pi * T(k) / T(samples);
    t[k] = Complex(cos(ang), sin(ang));
    rates[k] = c + rho * t[k];
  }
  // Held-out points alternate between the inside of the disc and a larger
  // arc |t| = 1.5 on the right (away from the left half-plane poles): a
  // truncated fit can be accurate near the nodes but not off the disc.
  std::vector<Complex> th(opt.heldout), rates_h(opt.heldout);
  for (int k = 0; k < opt.heldout; ++k) {
    using std::cos;
    using std::sin;
    T ang, r;
    if (k % 2 == 0) {
      ang = T(2) * pi * (T(k) + T(0.37)) / T(opt.heldout);
      r = T(0.7);
    } else {
      ang = pi * ((T(k) + T(0.5)) / T(opt.heldout) - T(0.5));
      r = T(1.5);
    }
    th[k] = Complex(r * cos(ang), r * sin(ang));
    rates_h[k] = c + rho * th[k];
  }
  const auto f = ball_samples<T>(n, rates);
  const auto fh = ball_samples<T>(n, rates_h);

  auto fit_error = [&](int dd, RationalFitT<T>* out) {
    try {
      auto fit = linearized_fit(t, f, dd, dd + n);
      const double e = static_cast<double>(heldout_error(fit, th, fh));
      if (out) *out = std::move(fit);
      return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
    } catch (const SolveError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  // Truncated fits of too low a degree can already reach 1e-9 near the
  // contour, so the degree is selected against half the working digits and
  // heldout_tolerance is only the final acceptance bound.
  const double select = std::min(opt.heldout_tolerance, std::pow(10.0, -std::numeric_limits<T>::digits10 / 2));
  const int bound = ball_pole_bound(n);
  if (!(fit_error(bound, nullptr) < select)) return std::nullopt;
  int lo = 0, hi = bound;  // hi passes
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (fit_error(mid, nullptr) < select)
      hi = mid;
    else
      lo = mid + 1;
  }
  RationalFitT<T> fit;
  const double err = fit_error(hi, &fit);

  // Back to R: t = (R - c) / rho.
  const Complex inv_rho = Complex(T(1) / rho);
  Polynomial<T> num = fit.num.substituted(-c * inv_rho, inv_rho);
  Polynomial<T> den = fit.den.substituted(-c * inv_rho, inv_rho);
  auto zeros = polynomial_roots(num);
  auto poles = polynomial_roots(den);
  const Complex lead = num.leading() / den.leading();

  Reconstruction out;
  out.n = n;
  out.removed_common = strip_common(zeros, poles, opt.common_root_tolerance);
  out.heldout_residual = err;
  out.digits = std::numeric_limits<T>::digits10;
  out.samples = samples;
  out.contour = contour;
  RationalFunction<T> model;
  model.num = Polynomial<T>::from_roots(zeros, lead);
  model.den = Polynomial<T>::from_roots(poles);
  out.model = model.template cast<double>();
  auto relative_residual = [](const Polynomial<T>& p, const Complex& z) {
    using std::abs;
    T scale(0), pow_z(1);
    for (const auto& c : p.coefficients()) {
      scale += abs(c) * pow_z;
      pow_z *= abs(z);
    }
    return static_cast<double>(abs(p(z)) / scale);
  };
  for (const auto& z : zeros) {
    out.zeros.push_back(narrow(z));
    out.zero_residuals.push_back(relative_residual(model.num, z));
  }
  for (const auto& p : poles) {
    out.poles.push_back(narrow(p));
    out.pole_residuals.push_back(relative_residual(model.den, p));
  }
  if (out.model.num.degree() != out.model.den.degree() + n)
    throw ReconstructionError("rational_reconstruct: degree relation deg N = deg D + n violated", err);
  return out;
}

}  // namespace detail

/// Rational model of M_{B_n} for odd n >= 1.
inline Reconstruction rational_reconstruct(int n, const ReconstructionOptions& opt_in = {}) {
  if (n < 1 || n % 2 == 0) throw ArgumentError("rational_reconstruct: n must be odd and >= 1");
  ReconstructionOptions opt = opt_in;
  const Contour contour = opt.contour.radius > 0.0 ? opt.contour : default_contour(n);
  contour.validate();
  const int min_samples = minimum_sample_count(n);
  const int samples = opt.samples > 0 ? opt.samples : 2 * min_samples;
  if (samples < min_samples)
    throw ArgumentError("rational_reconstruct: need at least " + std::to_string(min_samples) + " samples");
  if (opt.heldout < 1) throw ArgumentError("rational_reconstruct: need held-out samples");

  if (n == 1) {
    Reconstruction r;
    r.n = 1;
    r.model.num = Polynomial<double>(std::vector<cplx>{1.0, 1.0});
    r.zeros = {cplx(-1.0)};
    r.samples = samples;
    r.contour = contour;
    return r;
  }
  if (n <= 7)
    if (auto r = detail::reconstruct_at<Real40>(n, opt, contour, samples)) return *r;
  // 80 digits silently drops poles of tiny residue from n = 15 on (the fit
  // still reaches 1e-41), so larger n go straight to 160.
  if (n <= 13)
    if (auto r = detail::reconstruct_at<Real80>(n, opt, contour, samples)) return *r;
  if (auto r = detail::reconstruct_at<Real160>(n, opt, contour, samples)) return *r;
  throw ReconstructionError("rational_reconstruct: no denominator degree up to " +
                                std::to_string(ball_pole_bound(n)) + " reproduces the held-out samples",
                            std::numeric_limits<double>::infinity());
}

}  // namespace maglab
