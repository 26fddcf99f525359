#pragma once

// Exact magnitude functions of odd-dimensional balls and 3D spherical
// shells, at any complex scale R.
//
// For a smooth compact X in R^n, n = 2m - 1, let h solve
//   (R^2 - Delta)^m h = 0 in the complement Omega = R^n \ X,
//   D^j h = R^j (j even),  D^j h = 0 (j odd),   j = 0..m-1,
// with the trace operators
//   D^j = gamma_0 (R^2 - Delta)^{j/2}          j even,
//   D^j = d_nu (R^2 - Delta)^{(j-1)/2}         j odd,
// where nu is the outward normal of Omega. Then
//   M_X(R) = vol(X) R^n / (n! w_n)
//          + 1/(n! w_n) sum_{m/2 < j <= m} R^{n-2j} int_{dX} D^{2j-1} h dS.
// For radial X the boundary problem reduces to an m x m linear system over
// an explicit kernel basis (see expo_poly.hpp).

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "maglab/common.hpp"
#include "maglab/dense.hpp"
#include "maglab/expo_poly.hpp"

namespace maglab {

enum class Side { exterior, interior };

/// Orientation sign of d_nu relative to d/dr: the exterior component has
/// nu = -d/dr, the inner ball of a shell has nu = +d/dr.
inline int normal_sign(Side side) { return side == Side::exterior ? -1 : +1; }

template <class T>
struct TraceOptions {
  double condition_threshold = default_condition_threshold();
  double residual_tolerance = 1e-9;

  static double default_condition_threshold() {
    if constexpr (std::is_same_v<T, double>) {
      return 1e12;
    } else {
      // Keep the same 4-digit headroom of double precision.
      return std::pow(10.0, std::numeric_limits<T>::digits10 - 4);
    }
  }
};

template <class T = double>
struct BoundaryProblem {
  RadialOperatorSpec<T> spec;
  T radius{1};
  Side side = Side::exterior;
  std::vector<std::complex<T>> data;  // prescribed D^j u(radius), j = 0..m-1

  void validate() const {
    spec.validate();
    if (!(radius > T(0))) throw ArgumentError("boundary problem: radius must be positive");
    if (static_cast<int>(data.size()) != spec.m())
      throw ArgumentError("boundary problem: need exactly m = " + std::to_string(spec.m()) +
                          " boundary values");
    if (spec.rate == std::complex<T>(0)) throw ArgumentError("boundary problem: R must be nonzero");
  }
};

/// Traces D^0 .. D^{max_order} of u at `radius`, each multiplied by
/// exp(-log_scale).
template <class T>
std::vector<std::complex<T>> trace_ladder(const ExpoPoly<T>& u, int n, int max_order, const T& radius,
                                          Side side, const T& log_scale = T(0)) {
  std::vector<std::complex<T>> out(max_order + 1);
  const std::complex<T> sign(T(normal_sign(side)));
  ExpoPoly<T> v = u;
  for (int j = 0; j <= max_order; j += 2) {
    out[j] = v.evaluate(radius, log_scale);
    if (j + 1 <= max_order) out[j + 1] = sign * differentiate(v).evaluate(radius, log_scale);
    if (j + 2 <= max_order) v = helmholtz_apply(v, n);
  }
  return out;
}

/// D^j u at radius for one j.
template <class T>
std::complex<T> trace_value(const ExpoPoly<T>& u, int j, int n, const T& radius, Side side) {
  if (j < 0 || j > n) throw ArgumentError("trace_value: order must lie in [0, n]");
  ExpoPoly<T> v = helmholtz_power(u, n, j / 2);
  if (j % 2 == 0) return v.evaluate(radius);
  return std::complex<T>(T(normal_sign(side))) * differentiate(v).evaluate(radius);
}

template <class T = double>
struct RadialSolution {
  using Complex = std::complex<T>;
  int n = 3;
  T radius{1};
  Side side = Side::exterior;
  std::vector<ExpoPoly<T>> basis;
  // Column k of the trace system was evaluated with exp(-log_scales[k])
  // folded in, so scaled_coefficients[k] = coefficient_k * exp(log_scales[k]).
  std::vector<T> log_scales;
  std::vector<Complex> scaled_coefficients;
  std::vector<std::vector<Complex>> basis_traces;  // [k][j], j = 0..n
  double condition_estimate = 1.0;
  double trace_residual = 0.0;

  /// Coefficients over `basis`. May overflow for |R| radius beyond ~700; the
  /// traces below never do.
  std::vector<Complex> coefficients() const {
    std::vector<Complex> c(scaled_coefficients.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      using std::exp;
      c[k] = scaled_coefficients[k] * Complex(exp(-log_scales[k]));
    }
    return c;
  }

  ExpoPoly<T> solution() const {
    const auto c = coefficients();
    ExpoPoly<T> u(basis.empty() ? Complex(1) : basis.front().rate());
    for (std::size_t k = 0; k < basis.size(); ++k) u += basis[k] * c[k];
    return u;
  }

  /// D^j of the solution at the boundary, j = 0..n.
  Complex trace(int j) const {
    if (j < 0 || j > n) throw ArgumentError("RadialSolution::trace: order out of range");
    Complex s(0);
    for (std::size_t k = 0; k < basis.size(); ++k) s += scaled_coefficients[k] * basis_traces[k][j];
    return s;
  }
};

template <class T>
RadialSolution<T> solve_radial(const BoundaryProblem<T>& problem, std::vector<ExpoPoly<T>> basis,
                               const TraceOptions<T>& opt = {}) {
  using Complex = std::complex<T>;
  using std::abs;
  problem.validate();
  const int n = problem.spec.n;
  const int m = problem.spec.m();
  if (static_cast<int>(basis.size()) != m) throw ArgumentError("solve_radial: basis size != m");

  RadialSolution<T> sol;
  sol.n = n;
  sol.radius = problem.radius;
  sol.side = problem.side;
  sol.log_scales.resize(m);
  sol.basis_traces.resize(m);
  dense::Matrix<T> a(m, m);
  for (int k = 0; k < m; ++k) {
    sol.log_scales[k] = basis[k].dominant_exponent(problem.radius);
    sol.basis_traces[k] = trace_ladder(basis[k], n, n, problem.radius, problem.side, sol.log_scales[k]);
    for (int j = 0; j < m; ++j) a(j, k) = sol.basis_traces[k][j];
  }
  sol.basis = std::move(basis);

  sol.condition_estimate = dense::equilibrated_condition(a);
  const std::complex<double> rate_d(static_cast<double>(problem.spec.rate.real()),
                                    static_cast<double>(problem.spec.rate.imag()));
  if (!(sol.condition_estimate <= opt.condition_threshold))
    throw ResonanceError("radial trace system singular (resonance) at R = (" +
                             std::to_string(rate_d.real()) + ", " + std::to_string(rate_d.imag()) +
                             ")",
                         rate_d, sol.condition_estimate);
  dense::LU<T> lu(a);
  if (lu.singular())
    throw ResonanceError("radial trace system exactly singular", rate_d,
                         std::numeric_limits<double>::infinity());
  sol.scaled_coefficients = lu.solve(problem.data);

  // Residuals are measured against max(1, |g|_inf): odd rows carry zero data
  // but entries of size ~R^j.
  T gnorm(1);
  for (const auto& g : problem.data) gnorm = std::max<T>(gnorm, abs(g));
  T worst(0);
  for (int j = 0; j < m; ++j) worst = std::max<T>(worst, abs(sol.trace(j) - problem.data[j]) / gnorm);
  sol.trace_residual = static_cast<double>(worst);
  if (!(sol.trace_residual <= opt.residual_tolerance))
    throw ResonanceError("radial trace residual " + std::to_string(sol.trace_residual) +
                             " above tolerance",
                         rate_d, sol.condition_estimate);
  return sol;
}

/// Worst trace-system condition and residual seen by a magnitude evaluation.
struct RadialDiagnostics {
  double condition = 1.0;
  double residual = 0.0;

  template <class T>
  void absorb(const RadialSolution<T>& s) {
    condition = std::max(condition, s.condition_estimate);
    residual = std::max(residual, s.trace_residual);
  }
};

/// Exterior problem of |x| > radius over the decaying kernel basis.
template <class T>
RadialSolution<T> solve_exterior(const RadialOperatorSpec<T>& spec, const T& radius,
                                 const std::vector<std::complex<T>>& data,
                                 const TraceOptions<T>& opt = {}) {
  BoundaryProblem<T> p{spec, radius, Side::exterior, data};
  p.validate();
  return solve_radial(p, decaying_basis(spec), opt);
}

/// Interior problem of |x| < radius in R^3 over the regular kernel basis.
template <class T>
RadialSolution<T> solve_interior(const RadialOperatorSpec<T>& spec, const T& radius,
                                 const std::vector<std::complex<T>>& data,
                                 const TraceOptions<T>& opt = {}) {
  if (spec.n != 3) throw UnsupportedError("interior radial problems are implemented for n = 3 only");
  BoundaryProblem<T> p{spec, radius, Side::interior, data};
  p.validate();
  return solve_radial(p, regular_basis_3d<T>(spec.m(), spec.rate), opt);
}

/// Boundary data of the magnitude problem: R^j for even j, 0 for odd j.
template <class T>
std::vector<std::complex<T>> magnitude_boundary_data(int m, const std::complex<T>& rate) {
  std::vector<std::complex<T>> g(m, std::complex<T>(0));
  std::complex<T> p(1);
  for (int j = 0; j < m; ++j) {
    if (j % 2 == 0) g[j] = p;
    p *= rate;
  }
  return g;
}

template <class T>
T exact_factorial(int n) {
  T f(1);
  for (int i = 2; i <= n; ++i) f *= T(i);
  return f;
}

/// sum_{m/2 < j <= m} R^{n-2j} D^{2j-1} h, the radial boundary integrand
/// of the magnitude formula.
template <class T>
std::complex<T> boundary_flux_sum(const RadialSolution<T>& sol, int n, const std::complex<T>& rate) {
  using Complex = std::complex<T>;
  const int m = (n + 1) / 2;
  Complex s(0);
  for (int j = 1; j <= m; ++j) {
    if (2 * j <= m) continue;
    Complex w(1);
    const int e = n - 2 * j;
    if (e >= 0) {
      for (int i = 0; i < e; ++i) w *= rate;
    } else {
      for (int i = 0; i < -e; ++i) w /= rate;
    }
    s += w * sol.trace(2 * j - 1);
  }
  return s;
}

/// M_{radius * B_n}(R) for odd n. n = 1 is the closed form 1 + radius R.
template <class T = double>
std::complex<T> ball_magnitude(int n, const std::complex<T>& rate, const T& radius = T(1),
                               const TraceOptions<T>& opt = {}, RadialDiagnostics* diag = nullptr) {
  using Complex = std::complex<T>;
  if (n < 1 || n % 2 == 0) throw ArgumentError("ball_magnitude: n must be odd and >= 1");
  if (rate == Complex(0)) throw ArgumentError("ball_magnitude: R must be nonzero");
  if (!(radius > T(0))) throw ArgumentError("ball_magnitude: radius must be positive");
  if (n == 1) return Complex(1) + rate * Complex(radius);
  const int m = (n + 1) / 2;
  const RadialOperatorSpec<T> spec(n, rate);
  const auto sol = solve_exterior(spec, radius, magnitude_boundary_data(m, rate), opt);
  if (diag) diag->absorb(sol);
  const T nf = exact_factorial<T>(n);
  Complex rr(1);
  for (int i = 0; i < n; ++i) rr *= rate * Complex(radius);
  using std::pow;
  // area(S^{n-1}) / (n! w_n) = n / n!
  const Complex boundary = Complex(T(n) * pow(radius, n - 1) / nf) * boundary_flux_sum(sol, n, rate);
  return rr / Complex(nf) + boundary;
}

/// Interior contribution of the inner sphere |x| = a of a shell:
/// a^2 D^3 h(a) / (2R) with h the regular solution, h(a) = 1, h'(a) = 0.
template <class T>
std::complex<T> shell_inner_term(const T& a, const std::complex<T>& rate, const TraceOptions<T>& opt = {},
                                 RadialDiagnostics* diag = nullptr) {
  using Complex = std::complex<T>;
  const RadialOperatorSpec<T> spec(3, rate);
  const auto sol = solve_interior(spec, a, magnitude_boundary_data(2, rate), opt);
  if (diag) diag->absorb(sol);
  return Complex(a * a) * sol.trace(3) / (Complex(T(2)) * rate);
}

/// Exterior contribution of the outer sphere |x| = b: b^2 D^3 h(b) / (2R).
template <class T>
std::complex<T> shell_outer_term(const T& b, const std::complex<T>& rate, const TraceOptions<T>& opt = {},
                                 RadialDiagnostics* diag = nullptr) {
  using Complex = std::complex<T>;
  const RadialOperatorSpec<T> spec(3, rate);
  const auto sol = solve_exterior(spec, b, magnitude_boundary_data(2, rate), opt);
  if (diag) diag->absorb(sol);
  return Complex(b * b) * sol.trace(3) / (Complex(T(2)) * rate);
}

/// M_X(R) for the shell X = {a <= |x| <= b} in R^3.
template <class T = double>
std::complex<T> shell_magnitude(const T& a, const T& b, const std::complex<T>& rate,
                                const TraceOptions<T>& opt = {}, RadialDiagnostics* diag = nullptr) {
  using Complex = std::complex<T>;
  if (!(a > T(0)) || !(b > a)) throw ArgumentError("shell_magnitude: need 0 < a < b");
  if (rate == Complex(0)) throw ArgumentError("shell_magnitude: R must be nonzero");
  const Complex volume_term = Complex((b * b * b - a * a * a) / T(6)) * rate * rate * rate;
  return volume_term + shell_outer_term(b, rate, opt, diag) + shell_inner_term(a, rate, opt, diag);
}

/// Closed form with coefficients (7/3, 4, 4, 1) and an e^{-2R} quotient for
/// the (1, 2)-shell. It disagrees with shell_magnitude; kept only so the
/// deviation can be reported.
inline cplx alternate_shell_formula(cplx rate) {
  const cplx R = rate;
  const cplx e = std::exp(-2.0 * R);
  // 2 e^{-2R} (2R - sinh 2R) = 4R e^{-2R} - 1 + e^{-4R}
  const cplx den = 4.0 * R * e - 1.0 + e * e;
  if (std::abs(den) < 1e-300) throw PoleError("alternate_shell_formula: denominator vanishes");
  const cplx q = (e - 1.0) * (e - 1.0) * (R * R + 3.0 * R + 3.0) + 6.0 * R * (e - 1.0);
  return 7.0 / 3.0 * R * R * R + 4.0 * R * R + 4.0 * R + 1.0 - q / den;
}

// ---------------------------------------------------------------------------
// Large-R coefficient fits.

struct LeadingCoefficients {
  double c0 = 0.0;  // R^n
  double c1 = 0.0;  // R^{n-1}
  double c2 = 0.0;  // R^{n-2}
};

/// Least-squares fit of f(R) / R^n = sum_{i<terms} a_i R^{-i} over the
/// given real sample scales; returns (a_0, a_1, a_2).
inline LeadingCoefficients fit_leading_coefficients(const std::function<double(double)>& f, int n,
                                                    const std::vector<double>& scales, int terms = 10) {
  if (static_cast<int>(scales.size()) < terms)
    throw ArgumentError("fit_leading_coefficients: fewer samples than terms");
  if (terms < 3) throw ArgumentError("fit_leading_coefficients: need at least 3 terms");
  dense::Matrix<double> a(scales.size(), terms);
  std::vector<cplx> y(scales.size());
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const double R = scales[i];
    y[i] = f(R) / std::pow(R, n);
    double x = 1.0;
    for (int k = 0; k < terms; ++k) {
      a(i, k) = x;
      x /= R;
    }
  }
  const auto c = dense::least_squares(a, y);
  return {c[0].real(), c[1].real(), c[2].real()};
}

/// `count` points evenly spaced on [lo, hi].
inline std::vector<double> linear_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i)
    g[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return g;
}

}  // namespace maglab
