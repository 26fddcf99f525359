#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace maglab {

inline constexpr const char* kVersion = "0.3.0";

using cplx = std::complex<double>;

// Error hierarchy. Everything thrown by the library derives from Error so
// the CLI can map it to exit status 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

// Similarity matrix (or any dense system) too ill-conditioned to solve.
struct SolveError : Error {
  SolveError(const std::string& what, double condition)
      : Error(what), condition_estimate(condition) {}
  double condition_estimate;
};

// Trace system of a radial boundary problem is singular at this rate.
struct ResonanceError : Error {
  ResonanceError(const std::string& what, cplx rate, double condition)
      : Error(what), rate(rate), condition_estimate(condition) {}
  cplx rate;
  double condition_estimate;
};

struct MeshError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

struct PrecisionError : Error {
  using Error::Error;
};

struct ReconstructionError : Error {
  ReconstructionError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

struct PoleError : Error {
  using Error::Error;
};

struct DiagnosticError : Error {
  using Error::Error;
};

/// Volume of the unit ball in R^n (omega_0 = 1).
inline double unit_ball_volume(int n) {
  if (n < 0) throw ArgumentError("unit_ball_volume: negative dimension");
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

template <class T>
T pi_value() {
  if constexpr (std::is_floating_point_v<T>) {
    return std::numbers::pi_v<T>;
  } else {
    using std::acos;
    return acos(T(-1));
  }
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

/// n! * omega_n, the normalizer of all magnitude asymptotics.
inline double magnitude_normalizer(int n) {
  return factorial(n) * unit_ball_volume(n);
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace maglab
