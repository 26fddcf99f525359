#pragma once

// MPFR-backed fixed-precision reals and the adaptive front ends of the
// radial solvers.
//
// The kernel bases of the radial problems are badly conditioned for larger
// n and for |R| far from 1 (equilibrated condition ~1e13 at n = 9, R = 0.01;
// ~1e18 at n = 21). The double-precision entry points here retry in 40, 80
// and 160 digits until the condition leaves at least 12 good digits.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "maglab/common.hpp"
#include "maglab/radial_exact.hpp"

namespace maglab {

template <unsigned Digits>
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                           boost::multiprecision::et_off>;

using Real40 = Real<40>;
using Real80 = Real<80>;
using Real160 = Real<160>;

template <class T>
std::complex<T> widen(const cplx& z) {
  return {T(z.real()), T(z.imag())};
}

template <class T>
cplx narrow(const std::complex<T>& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

struct AdaptiveOptions {
  // Accept a level once condition * 10^-digits10 <= this.
  double accuracy = 1e-12;
  double residual_tolerance = 1e-9;
};

/// Which precision answered, and how well conditioned it was.
struct AdaptiveReport {
  int digits = 0;
  double condition = 1.0;
  double residual = 0.0;
};

namespace detail {

// Runs eval.template operator()<T>(opts, diag) over an increasing precision
// ladder. A level whose condition exceeds its own threshold throws
// ResonanceError and escalates; the last level's error propagates.
template <class Eval>
cplx escalate(Eval&& eval, const AdaptiveOptions& opt, AdaptiveReport* report) {
  std::optional<cplx> fallback;
  AdaptiveReport fallback_report;
  auto level = [&]<class T>(bool last) -> std::optional<cplx> {
    TraceOptions<T> topt;
    topt.residual_tolerance = opt.residual_tolerance;
    RadialDiagnostics diag;
    const int digits = std::numeric_limits<T>::digits10;
    try {
      const cplx v = eval.template operator()<T>(topt, &diag);
      const AdaptiveReport rep{digits, diag.condition, diag.residual};
      if (diag.condition * std::pow(10.0, -digits) <= opt.accuracy || last) {
        if (report) *report = rep;
        return v;
      }
      fallback = v;
      fallback_report = rep;
    } catch (const ResonanceError&) {
      if (last) {
        if (fallback) {
          if (report) *report = fallback_report;
          return fallback;
        }
        throw;
      }
    }
    return std::nullopt;
  };
  if (auto v = level.template operator()<double>(false)) return *v;
  if (auto v = level.template operator()<Real40>(false)) return *v;
  if (auto v = level.template operator()<Real80>(false)) return *v;
  return *level.template operator()<Real160>(true);
}

}  // namespace detail

/// M_{radius * B_n}(R), accurate to ~1e-12 relative away from poles.
inline cplx exact_ball_magnitude(int n, cplx rate, double radius = 1.0, const AdaptiveOptions& opt = {},
                                 AdaptiveReport* report = nullptr) {
  if (n < 1 || n % 2 == 0) throw ArgumentError("ball_magnitude: n must be odd and >= 1");
  if (rate == cplx(0)) throw ArgumentError("ball_magnitude: R must be nonzero");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ArgumentError("ball_magnitude: radius must be positive");
  if (!std::isfinite(rate.real()) || !std::isfinite(rate.imag()))
    throw ArgumentError("ball_magnitude: R must be finite");
  if (n == 1) return 1.0 + rate * radius;
  auto eval = [&]<class T>(const TraceOptions<T>& t, RadialDiagnostics* d) {
    return narrow(ball_magnitude<T>(n, widen<T>(rate), T(radius), t, d));
  };
  return detail::escalate(eval, opt, report);
}

/// M_X(R) for the shell a <= |x| <= b in R^3.
inline cplx exact_shell_magnitude(double a, double b, cplx rate, const AdaptiveOptions& opt = {},
                                  AdaptiveReport* report = nullptr) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) throw ArgumentError("shell_magnitude: need 0 < a < b");
  if (rate == cplx(0)) throw ArgumentError("shell_magnitude: R must be nonzero");
  if (!std::isfinite(rate.real()) || !std::isfinite(rate.imag()))
    throw ArgumentError("shell_magnitude: R must be finite");
  auto eval = [&]<class T>(const TraceOptions<T>& t, RadialDiagnostics* d) {
    return narrow(shell_magnitude<T>(T(a), T(b), widen<T>(rate), t, d));
  };
  return detail::escalate(eval, opt, report);
}

}  // namespace maglab
