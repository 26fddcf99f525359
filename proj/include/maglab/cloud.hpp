#pragma once

// Lower bounds for the magnitude of compact domains from finite samples.
//
// Samples are cubic lattices h Z^n aligned at the origin, intersected with
// the closed domain. Halving h gives a superset with bit-identical shared
// coordinates, so successive levels are nested and (for positive definite
// spaces) their magnitudes are nondecreasing.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "maglab/common.hpp"
#include "maglab/metric_space.hpp"
#include "maglab/parallel.hpp"

namespace maglab {

enum class ShapeKind { ball, shell, box, point_file };

struct DomainShape {
  ShapeKind kind = ShapeKind::ball;
  int n = 3;
  double radius = 1.0;          // ball
  double inner = 1.0;           // shell
  double outer = 2.0;           // shell
  std::vector<double> sides;    // box, centered at the origin
  std::string path;             // point_file

  static DomainShape ball(int n, double radius) {
    DomainShape s;
    s.kind = ShapeKind::ball;
    s.n = n;
    s.radius = radius;
    s.validate();
    return s;
  }
  static DomainShape shell(double inner, double outer) {
    DomainShape s;
    s.kind = ShapeKind::shell;
    s.n = 3;
    s.inner = inner;
    s.outer = outer;
    s.validate();
    return s;
  }
  static DomainShape box(std::vector<double> sides) {
    DomainShape s;
    s.kind = ShapeKind::box;
    s.n = static_cast<int>(sides.size());
    s.sides = std::move(sides);
    s.validate();
    return s;
  }
  static DomainShape point_file(std::string path) {
    DomainShape s;
    s.kind = ShapeKind::point_file;
    s.path = std::move(path);
    return s;
  }

  void validate() const {
    if (kind == ShapeKind::point_file) return;
    if (n < 1) throw ArgumentError("shape: dimension must be >= 1");
    switch (kind) {
      case ShapeKind::ball:
        if (!(radius > 0.0)) throw ArgumentError("shape: ball radius must be positive");
        break;
      case ShapeKind::shell:
        if (n != 3) throw ArgumentError("shape: shells are three-dimensional");
        if (!(inner > 0.0) || !(inner < outer))
          throw ArgumentError("shape: shell needs 0 < inner < outer");
        break;
      case ShapeKind::box:
        if (sides.empty()) throw ArgumentError("shape: box needs side lengths");
        for (double s : sides)
          if (!(s > 0.0)) throw ArgumentError("shape: box sides must be positive");
        break;
      case ShapeKind::point_file:
        break;
    }
  }

  /// Half-width of an origin-centered cube containing the domain.
  double extent() const {
    switch (kind) {
      case ShapeKind::ball:
        return radius;
      case ShapeKind::shell:
        return outer;
      case ShapeKind::box: {
        double e = 0.0;
        for (double s : sides) e = std::max(e, 0.5 * s);
        return e;
      }
      case ShapeKind::point_file:
        break;
    }
    throw ArgumentError("shape: point files have no extent");
  }

  /// Closed-domain membership, evaluated exactly in floating point.
  bool contains(const double* x) const {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) r2 += x[i] * x[i];
    switch (kind) {
      case ShapeKind::ball:
        return r2 <= radius * radius;
      case ShapeKind::shell:
        return r2 <= outer * outer && r2 >= inner * inner;
      case ShapeKind::box:
        for (int i = 0; i < n; ++i)
          if (std::abs(x[i]) > 0.5 * sides[i]) return false;
        return true;
      case ShapeKind::point_file:
        break;
    }
    return false;
  }
};

inline std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::ball: return "ball";
    case ShapeKind::shell: return "shell";
    case ShapeKind::box: return "box";
    case ShapeKind::point_file: return "point-file";
  }
  return "?";
}

inline constexpr std::size_t kDefaultPointCap = 20000;

/// Lattice points h*k (k in Z^n) inside the closed domain.
inline Eigen::MatrixXd lattice_points(const DomainShape& shape, double spacing,
                                      std::size_t cap = kDefaultPointCap) {
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw ArgumentError("sample_domain: spacing must be positive");
  shape.validate();
  const int n = shape.n;
  const auto kmax = static_cast<std::int64_t>(std::floor(shape.extent() / spacing));

  std::vector<double> pts;
  std::vector<std::int64_t> idx(n, -kmax);
  std::vector<double> x(n);
  std::size_t count = 0;
  for (;;) {
    for (int i = 0; i < n; ++i) x[i] = static_cast<double>(idx[i]) * spacing;
    if (shape.contains(x.data())) {
      if (++count > cap)
        throw ResourceError("sample_domain: more than " + std::to_string(cap) +
                            " points at spacing " + std::to_string(spacing));
      pts.insert(pts.end(), x.begin(), x.end());
    }
    int d = n - 1;
    while (d >= 0 && ++idx[d] > kmax) {
      idx[d] = -kmax;
      --d;
    }
    if (d < 0) break;
  }
  if (count == 0) throw ArgumentError("sample_domain: spacing yields no points");
  Eigen::MatrixXd out(static_cast<Eigen::Index>(count), n);
  for (std::size_t p = 0; p < count; ++p)
    for (int i = 0; i < n; ++i) out(static_cast<Eigen::Index>(p), i) = pts[p * n + i];
  return out;
}

inline FiniteMetricSpace sample_domain(const DomainShape& shape, double spacing,
                                       std::size_t cap = kDefaultPointCap) {
  // Euclidean distances satisfy the triangle inequality by construction.
  const SpaceValidation v{.check_triangle = false};
  if (shape.kind == ShapeKind::point_file) {
    auto s = read_point_file(shape.path, v);
    if (static_cast<std::size_t>(s.size()) > cap)
      throw ResourceError("sample_domain: point file exceeds cap");
    return s;
  }
  return FiniteMetricSpace::from_points(lattice_points(shape, spacing, cap), v);
}

struct Extrapolation {
  double estimate = 0.0;
  double uncertainty = 0.0;
  double fitted_power = std::numeric_limits<double>::quiet_NaN();
  double used_power = std::numeric_limits<double>::quiet_NaN();
};

struct RefinementReport {
  std::vector<double> resolutions;  // decreasing spacings
  std::vector<std::size_t> counts;
  std::vector<double> magnitudes;
  double scale = 1.0;
  double extrapolated = std::numeric_limits<double>::quiet_NaN();
  double uncertainty = std::numeric_limits<double>::quiet_NaN();
  double fitted_power = std::numeric_limits<double>::quiet_NaN();
};

struct ExtrapolationOptions {
  // The fitted power is clamped into [min_power, max_power]. Lattice
  // samples of smooth domains lose O(h) magnitude near the boundary, and
  // three-level fits on coarse grids routinely report p well below 1.
  double min_power = 1.0;
  double max_power = 4.0;
  double monotone_slack = 1e-12;
};

/// Fits m(h) = m* - C h^p through the last three levels.
inline Extrapolation extrapolate(const std::vector<double>& spacings,
                                 const std::vector<double>& values,
                                 const ExtrapolationOptions& opt = {}) {
  const std::size_t k = values.size();
  if (k < 3 || spacings.size() != k) throw ArgumentError("extrapolate: need at least 3 levels");
  for (std::size_t i = 1; i < k; ++i) {
    const double slack = opt.monotone_slack * std::max(1.0, std::abs(values[i]));
    if (values[i] < values[i - 1] - slack)
      throw DiagnosticError("extrapolate: magnitudes decrease between levels " +
                            std::to_string(i - 1) + " and " + std::to_string(i));
    if (!(spacings[i] < spacings[i - 1]))
      throw ArgumentError("extrapolate: spacings must decrease");
  }
  const double h1 = spacings[k - 3], h2 = spacings[k - 2], h3 = spacings[k - 1];
  const double m1 = values[k - 3], m2 = values[k - 2], m3 = values[k - 1];
  const double ratio = h1 / h2;
  if (std::abs(h2 / h3 - ratio) > 1e-9 * ratio)
    throw ArgumentError("extrapolate: spacings must form a geometric sequence");

  Extrapolation out;
  const double d1 = m2 - m1, d2 = m3 - m2;
  if (d2 <= 0.0) {
    out.estimate = m3;
    out.uncertainty = 0.0;
    out.fitted_power = d1 > 0.0 ? std::numeric_limits<double>::infinity()
                                : std::numeric_limits<double>::quiet_NaN();
    out.used_power = opt.max_power;
    return out;
  }
  out.fitted_power = d1 > 0.0 ? std::log(d1 / d2) / std::log(ratio)
                              : std::numeric_limits<double>::quiet_NaN();
  double p = std::isfinite(out.fitted_power) ? out.fitted_power : opt.min_power;
  p = std::clamp(p, opt.min_power, opt.max_power);
  out.used_power = p;
  const double correction = d2 / (std::pow(ratio, p) - 1.0);
  out.estimate = m3 + correction;
  out.uncertainty = std::abs(correction);
  return out;
}

inline Extrapolation extrapolate(const RefinementReport& report,
                                 const ExtrapolationOptions& opt = {}) {
  return extrapolate(report.resolutions, report.magnitudes, opt);
}

struct RefinementOptions {
  double coarsest = 0.0;  // 0: 0.4 * shape extent
  std::size_t cap = kDefaultPointCap;
  SolveOptions solve{};
  ExtrapolationOptions extrapolation{};
  unsigned threads = thread_count();
};

inline RefinementReport refinement_sequence(const DomainShape& shape, double scale, int levels,
                                            const RefinementOptions& opt = {}) {
  if (levels < 2) throw ArgumentError("refinement_sequence: levels must be >= 2");
  if (!(scale > 0.0)) throw ArgumentError("refinement_sequence: scale must be positive");
  // Point files ignore the spacing; any positive value labels the levels.
  double h0 = opt.coarsest;
  if (!(h0 > 0.0)) h0 = shape.kind == ShapeKind::point_file ? 1.0 : 0.4 * shape.extent();

  RefinementReport rep;
  rep.scale = scale;
  rep.resolutions.resize(levels);
  rep.counts.resize(levels);
  rep.magnitudes.resize(levels);
  for (int l = 0; l < levels; ++l) rep.resolutions[l] = std::ldexp(h0, -l);

  // Sample first so cap violations surface before any expensive solve.
  std::vector<FiniteMetricSpace> spaces;
  spaces.reserve(levels);
  for (int l = 0; l < levels; ++l) {
    spaces.push_back(sample_domain(shape, rep.resolutions[l], opt.cap));
    rep.counts[l] = static_cast<std::size_t>(spaces.back().size());
  }
  parallel_for(
      static_cast<std::size_t>(levels),
      [&](std::size_t l) { rep.magnitudes[l] = magnitude(spaces[l], scale, opt.solve); },
      opt.threads);

  for (int l = 1; l < levels; ++l) {
    const double slack =
        opt.extrapolation.monotone_slack * std::max(1.0, std::abs(rep.magnitudes[l]));
    if (rep.magnitudes[l] < rep.magnitudes[l - 1] - slack)
      throw DiagnosticError("refinement_sequence: magnitude decreased on refinement");
  }
  if (levels >= 3) {
    const auto ex = extrapolate(rep, opt.extrapolation);
    rep.extrapolated = ex.estimate;
    rep.uncertainty = ex.uncertainty;
    rep.fitted_power = ex.fitted_power;
  }
  return rep;
}

}  // namespace maglab
