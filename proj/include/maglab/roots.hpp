#pragma once

// Poles and zeros of meromorphic functions in rectangles of C: argument
// principle counts with adaptive refinement, quadrisection, and Newton
// steps on the log-derivative. Plus the two surveys built on it: the
// rational ball models and the (1, 2)-shell denominator sinh(2R) - 2R.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "maglab/common.hpp"
#include "maglab/reconstruct.hpp"

namespace maglab {

/// f(z) = mantissa * exp(log_factor). Lets functions like sinh(2R) be
/// evaluated far out without overflow; log_factor may switch branches
/// between points.
struct ScaledValue {
  cplx mantissa;
  cplx log_factor{0.0, 0.0};
};

struct Meromorphic {
  std::function<ScaledValue(cplx)> eval;
  std::string id;
  bool conjugate_symmetric = false;

  static Meromorphic plain(std::function<cplx(cplx)> f, std::string id, bool conj_symmetric = false) {
    return {[f = std::move(f)](cplx z) { return ScaledValue{f(z)}; }, std::move(id), conj_symmetric};
  }
};

struct SearchRegion {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int max_depth = 10;
  int points_per_side = 256;

  void validate() const {
    if (!(x1 > x0) || !(y1 > y0) || !std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0) ||
        !std::isfinite(y1))
      throw ArgumentError("search region: degenerate rectangle");
    if (points_per_side < 4) throw ArgumentError("search region: need at least 4 points per side");
    if (max_depth < 0) throw ArgumentError("search region: negative depth");
  }
  double diagonal() const { return std::hypot(x1 - x0, y1 - y0); }
  bool contains(cplx z, double slack = 0.0) const {
    return z.real() >= x0 - slack && z.real() <= x1 + slack && z.imag() >= y0 - slack && z.imag() <= y1 + slack;
  }
  SearchRegion expanded(double d) const {
    SearchRegion r = *this;
    r.x0 -= d;
    r.x1 += d;
    r.y0 -= d;
    r.y1 += d;
    return r;
  }
};

enum class RootKind { pole, zero };
inline std::string to_string(RootKind k) { return k == RootKind::pole ? "pole" : "zero"; }

struct Root {
  cplx location;
  int multiplicity = 1;
  RootKind kind = RootKind::zero;
  double residual = 0.0;
};

struct UnresolvedCell {
  SearchRegion cell;
  int count = 0;
};

struct RootSet {
  std::vector<Root> roots;
  std::vector<UnresolvedCell> unresolved;
  SearchRegion region;
  std::string function_id;

  std::vector<Root> of_kind(RootKind k) const {
    std::vector<Root> out;
    for (const auto& r : roots)
      if (r.kind == k) out.push_back(r);
    return out;
  }
  int signed_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.kind == RootKind::zero ? r.multiplicity : -r.multiplicity;
    return s;
  }
};

/// Sort by (Im, Re), the canonical order of every reported root list.
inline void canonical_sort(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.kind < b.kind;
  });
}

/// Largest distance from a root to the nearest conjugate of a root of the
/// same kind. 0 for conjugation-closed sets.
inline double conjugate_pairing_error(const std::vector<Root>& roots) {
  double worst = 0.0;
  for (const auto& r : roots) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : roots)
      if (s.kind == r.kind) best = std::min(best, std::abs(std::conj(s.location) - r.location));
    worst = std::max(worst, best);
  }
  return worst;
}

inline double conjugate_pairing_error(const std::vector<cplx>& z) {
  std::vector<Root> r;
  for (const auto& v : z) r.push_back({v});
  return conjugate_pairing_error(r);
}

// ---------------------------------------------------------------------------
// Argument principle

struct RootSearchOptions {
  int max_points_per_side = 8192;
  int nudges = 5;
  double nudge_fraction = 1e-3;
  double integrality = 0.25;
  double newton_step = 1e-12;  // relative step norm
  int newton_iterations = 100;
  double residual_tolerance = 1e-10;
  int min_depth = 1;  // cells with zero net count are still split this deep
  double moment_tolerance = 1e-6;  // relative to max(1, cell diagonal)
};

struct Winding {
  int count = 0;
  double raw = 0.0;
  cplx moment{0.0, 0.0};  // sum of zeros minus sum of poles
  int points_per_side = 0;
  SearchRegion used;  // after nudging
};

namespace detail {

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Phase of f(b)/f(a) in (-pi, pi].
inline std::optional<double> phase_step(const ScaledValue& a, const ScaledValue& b) {
  if (!finite(a.mantissa) || !finite(b.mantissa) || a.mantissa == cplx(0) || b.mantissa == cplx(0))
    return std::nullopt;
  const double ph = std::arg(b.mantissa / a.mantissa) + (b.log_factor.imag() - a.log_factor.imag());
  if (!std::isfinite(ph)) return std::nullopt;
  return std::remainder(ph, 2.0 * std::numbers::pi);
}

struct ContourSums {
  double winding = 0.0;  // (1/2 pi i) oint f'/f
  cplx moment{0.0, 0.0};  // (1/2 pi i) oint z f'/f = sum zeros - sum poles
};

// Contour sums of f along the boundary of r, `per_side` points per side, by
// the trapezoid rule on increments of log f. nullopt when a value is
// unusable or a phase step is too coarse to trust.
inline std::optional<ContourSums> winding_once(const Meromorphic& f, const SearchRegion& r, int per_side) {
  const cplx corners[5] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}, {r.x0, r.y0}};
  double total = 0.0;
  cplx moment(0.0, 0.0);
  cplx zprev = corners[0];
  ScaledValue prev = f.eval(zprev);
  for (int s = 0; s < 4; ++s) {
    for (int k = 1; k <= per_side; ++k) {
      const cplx z = corners[s] + (corners[s + 1] - corners[s]) * (static_cast<double>(k) / per_side);
      const ScaledValue cur = f.eval(z);
      const auto step = phase_step(prev, cur);
      if (!step || std::abs(*step) > std::numbers::pi / 3.0) return std::nullopt;
      const double dlogabs =
          std::log(std::abs(cur.mantissa) / std::abs(prev.mantissa)) + (cur.log_factor.real() - prev.log_factor.real());
      total += *step;
      moment += 0.5 * (z + zprev) * cplx(dlogabs, *step);
      prev = cur;
      zprev = z;
    }
  }
  const double two_pi = 2.0 * std::numbers::pi;
  return ContourSums{total / two_pi, moment / cplx(0.0, two_pi)};
}

// f'/f by central differences of f(z +- h) / f(z), or of the reciprocal
// near poles, so the differenced function is locally linear. (Differencing
// log f directly breaks down once |z - root| < h.) nullopt at an exact root.
inline std::optional<cplx> log_derivative(const Meromorphic& f, cplx z, bool reciprocal = false) {
  const double h = 1e-6 * std::max(1.0, std::abs(z));
  const ScaledValue c = f.eval(z), p = f.eval(z + h), m = f.eval(z - h);
  if (!finite(c.mantissa) || !finite(p.mantissa) || !finite(m.mantissa) || c.mantissa == cplx(0) ||
      p.mantissa == cplx(0) || m.mantissa == cplx(0))
    return std::nullopt;
  cplx qp = p.mantissa / c.mantissa * std::exp(p.log_factor - c.log_factor);
  cplx qm = m.mantissa / c.mantissa * std::exp(m.log_factor - c.log_factor);
  if (!reciprocal) return (qp - qm) / (2.0 * h);
  return -(1.0 / qp - 1.0 / qm) / (2.0 * h);
}

inline double magnitude_of(const ScaledValue& v) {
  return std::abs(v.mantissa) * std::exp(v.log_factor.real());
}

}  // namespace detail

/// Number of zeros minus poles of f inside the rectangle.
inline Winding count_in_region(const Meromorphic& f, const SearchRegion& region, const RootSearchOptions& opt = {}) {
  region.validate();
  for (int attempt = 0; attempt <= opt.nudges; ++attempt) {
    const SearchRegion r = region.expanded(attempt * opt.nudge_fraction * region.diagonal());
    for (int per = region.points_per_side; per <= opt.max_points_per_side; per *= 2) {
      const auto w = detail::winding_once(f, r, per);
      if (!w) continue;
      const double rounded = std::round(w->winding);
      if (std::abs(w->winding - rounded) <= opt.integrality)
        return {static_cast<int>(rounded), w->winding, w->moment, per, r};
    }
  }
  throw PrecisionError("count_in_region: winding number not integral after refinement and nudging");
}

/// Newton iteration for a root of multiplicity `mult` (zero) or a pole.
inline std::optional<Root> newton_polish(const Meromorphic& f, cplx z, RootKind kind, int mult,
                                         const RootSearchOptions& opt = {}) {
  const double sgn = kind == RootKind::zero ? 1.0 : -1.0;
  for (int it = 0; it < opt.newton_iterations; ++it) {
    const auto d = detail::log_derivative(f, z, kind == RootKind::pole);
    if (!d || *d == cplx(0) || !detail::finite(*d)) break;
    // zero: z -= mult / (f'/f); pole (zero of 1/f): z += mult / (f'/f)
    const cplx step = sgn * static_cast<double>(mult) / *d;
    if (!detail::finite(step)) break;
    z -= step;
    if (std::abs(step) <= opt.newton_step * std::max(1.0, std::abs(z))) {
      const double mag = detail::magnitude_of(f.eval(z));
      const double residual = kind == RootKind::zero ? mag : 1.0 / mag;
      if (residual < opt.residual_tolerance || !std::isfinite(mag) || mag == 0.0)
        return Root{z, mult, kind, std::isfinite(residual) ? residual : 0.0};
      return std::nullopt;
    }
  }
  // Stagnated; accept only if the residual already satisfies the tolerance.
  const double mag = detail::magnitude_of(f.eval(z));
  const double residual = kind == RootKind::zero ? mag : 1.0 / mag;
  if (residual < opt.residual_tolerance) return Root{z, mult, kind, residual};
  return std::nullopt;
}

namespace detail {

inline void add_unique(std::vector<Root>& roots, const Root& r) {
  for (const auto& s : roots)
    if (s.kind == r.kind && std::abs(s.location - r.location) <= 1e-9 * std::max(1.0, std::abs(r.location)))
      return;
  roots.push_back(r);
}

inline void quadrisect(const Meromorphic& f, const SearchRegion& cell, int depth, const RootSearchOptions& opt,
                       RootSet& out) {
  const Winding w = count_in_region(f, cell, opt);
  // A zero and a pole in one cell cancel in the count but not in the moment.
  const double tol = opt.moment_tolerance * std::max(1.0, cell.diagonal());
  if (w.count == 0 && depth >= opt.min_depth && std::abs(w.moment) <= tol) return;
  if (std::abs(w.count) == 1 || (depth >= cell.max_depth && w.count != 0)) {
    const RootKind kind = w.count > 0 ? RootKind::zero : RootKind::pole;
    const cplx center(0.5 * (w.used.x0 + w.used.x1), 0.5 * (w.used.y0 + w.used.y1));
    const cplx guess = w.moment / static_cast<double>(w.count);
    for (const cplx start : {guess, center}) {
      if (!w.used.contains(start)) continue;
      auto r = newton_polish(f, start, kind, std::abs(w.count), opt);
      if (r && w.used.contains(r->location) &&
          std::abs(w.moment - static_cast<double>(w.count) * r->location) <= tol) {
        add_unique(out.roots, *r);
        return;
      }
    }
  }
  if (depth >= cell.max_depth) {
    out.unresolved.push_back({w.used, w.count});
    return;
  }
  const double xm = 0.5 * (cell.x0 + cell.x1), ym = 0.5 * (cell.y0 + cell.y1);
  const double xs[3] = {cell.x0, xm, cell.x1}, ys[3] = {cell.y0, ym, cell.y1};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      SearchRegion sub = cell;
      sub.x0 = xs[i];
      sub.x1 = xs[i + 1];
      sub.y0 = ys[j];
      sub.y1 = ys[j + 1];
      quadrisect(f, sub, depth + 1, opt, out);
    }
}

}  // namespace detail

/// All poles and zeros in the region. Cells are split until each holds net
/// count +-1 (or max_depth, where the count becomes the multiplicity).
/// Deterministic: the traversal is sequential and the output sorted.
inline RootSet find_roots(const Meromorphic& f, const SearchRegion& region, const RootSearchOptions& opt = {}) {
  region.validate();
  RootSet out;
  out.region = region;
  out.function_id = f.id;
  detail::quadrisect(f, region, 0, opt, out);
  // Nudged cells overlap, so duplicates were merged; also drop roots that
  // only a nudged neighbour could see.
  std::erase_if(out.roots, [&](const Root& r) { return !region.contains(r.location, 1e-12); });
  if (f.conjugate_symmetric) {
    const auto found = out.roots;
    for (const auto& r : found) {
      const cplx c = std::conj(r.location);
      if (r.location.imag() == 0.0 || !region.contains(c)) continue;
      if (auto p = newton_polish(f, c, r.kind, r.multiplicity, opt)) detail::add_unique(out.roots, *p);
    }
  }
  canonical_sort(out.roots);
  return out;
}

// ---------------------------------------------------------------------------
// Ball census

struct Census {
  int n = 3;
  RootSet poles, zeros;
  Reconstruction model;
};

/// Poles and zeros of the rational model of M_{B_n}; restricted to
/// `region` when given.
inline Census ball_pole_zero_census(int n, const std::optional<SearchRegion>& region = std::nullopt,
                                    const ReconstructionOptions& ropt = {}) {
  Census c;
  c.n = n;
  c.model = rational_reconstruct(n, ropt);
  auto fill = [&](RootSet& set, const std::vector<cplx>& z, const std::vector<double>& res, RootKind kind) {
    set.function_id = "ball" + std::to_string(n);
    if (region) set.region = *region;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (!region || region->contains(z[i])) set.roots.push_back({z[i], 1, kind, res[i]});
    canonical_sort(set.roots);
  };
  fill(c.poles, c.model.poles, c.model.pole_residuals, RootKind::pole);
  fill(c.zeros, c.model.zeros, c.model.zero_residuals, RootKind::zero);
  return c;
}

/// Smallest |arg R| over a point set (pi for an empty set).
inline double min_abs_arg(const std::vector<Root>& roots) {
  double best = std::numbers::pi;
  for (const auto& r : roots) best = std::min(best, std::abs(std::arg(r.location)));
  return best;
}

// ---------------------------------------------------------------------------
// Shell denominator

/// sinh(2R) - 2R in scaled form: e^{2R} [(1 - e^{-4R})/2 - 2R e^{-2R}] for
/// Re R >= 0, mirrored for Re R < 0.
inline ScaledValue shell_denominator(cplx R) {
  if (R.real() >= 0.0) {
    const cplx e2 = std::exp(-2.0 * R);
    return {0.5 * (1.0 - e2 * e2) - 2.0 * R * e2, 2.0 * R};
  }
  const cplx e2 = std::exp(2.0 * R);
  return {-0.5 * (1.0 - e2 * e2) - 2.0 * R * e2, -2.0 * R};
}

inline Meromorphic shell_denominator_model() {
  return {shell_denominator, "sinh(2R)-2R", true};
}

/// |sinh(2R) - 2R| from the scaled form.
inline double shell_denominator_abs(cplx R) { return detail::magnitude_of(shell_denominator(R)); }

struct ShellSurvey {
  RootSet roots;                  // poles of the shell magnitude, 0 < Im <= Y
  std::vector<cplx> right_branch;  // Re > 0, increasing Im
  double slope = 0.0;             // fit Re = slope * log(Im) + intercept
  double intercept = 0.0;
  int guess_count = 0;            // roots reached from asymptotic guesses
};

/// Roots R_k of sinh(2R) = 2R with 0 < Im R <= max_im.
///
/// Initial guesses come from e^{2R} ~ 4R: R = (log(4R) + 2 pi i k) / 2
/// iterated to a fixed point, then polished by Newton; the result is
/// cross-checked by quadrisection over the strip.
inline ShellSurvey shell_pole_survey(double max_im, const RootSearchOptions& opt = {}) {
  if (!(max_im >= 10.0)) throw ArgumentError("shell_pole_survey: need Im bound >= 10");
  const Meromorphic f = shell_denominator_model();
  ShellSurvey s;

  std::vector<Root> guessed;
  for (int k = 1;; ++k) {
    cplx z(1.0, std::numbers::pi * k / 2.0);
    for (int it = 0; it < 60; ++it) z = 0.5 * (std::log(4.0 * z) + cplx(0.0, 2.0 * std::numbers::pi * k));
    if (z.imag() > max_im + 1.0) break;
    if (auto r = newton_polish(f, z, RootKind::zero, 1, opt); r && r->location.imag() <= max_im) {
      detail::add_unique(guessed, *r);
      detail::add_unique(guessed, {-std::conj(r->location), 1, RootKind::zero, r->residual});
    }
  }
  s.guess_count = static_cast<int>(guessed.size());

  double x_extent = 2.0;
  for (const auto& r : guessed) x_extent = std::max(x_extent, std::abs(r.location.real()) + 1.0);
  SearchRegion region{-x_extent, x_extent, 0.5, max_im, 10, 256};
  s.roots = find_roots(f, region, opt);
  for (auto& r : s.roots.roots) r.kind = RootKind::pole;  // zeros of the denominator = poles of M
  s.roots.function_id = "shell(1,2) poles: sinh(2R)-2R";
  for (const auto& r : s.roots.roots)
    if (r.location.real() > 0.0) s.right_branch.push_back(r.location);

  // Tally agreement with the guesses; anything found only one way is kept.
  for (const auto& g : guessed) {
    Root p = g;
    p.kind = RootKind::pole;
    detail::add_unique(s.roots.roots, p);
  }
  canonical_sort(s.roots.roots);
  s.right_branch.clear();
  for (const auto& r : s.roots.roots)
    if (r.location.real() > 0.0) s.right_branch.push_back(r.location);

  const std::size_t k = s.right_branch.size();
  if (k >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& z : s.right_branch) {
      const double x = std::log(z.imag()), y = z.real();
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double den = k * sxx - sx * sx;
    s.slope = (k * sxy - sx * sy) / den;
    s.intercept = (sy - s.slope * sx) / k;
  }
  return s;
}

}  // namespace maglab
