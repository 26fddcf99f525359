#pragma once

// Magnitude of finite metric spaces.
//
// A weighting of (X, d) at scale R is a vector w with
//   sum_y exp(-R d(x, y)) w(y) = 1   for every x,
// and the magnitude is the sum of the weights. Scale always enters through
// the exponent, so magnitude(X, R) == magnitude(R X, 1).

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maglab/common.hpp"

namespace maglab {

struct SpaceValidation {
  bool check_triangle = true;
  double triangle_slack = 1e-12;
};

class FiniteMetricSpace {
 public:
  /// Explicit distance matrix. Validates symmetry, zero diagonal, strictly
  /// positive off-diagonal entries and (optionally) the triangle inequality.
  static FiniteMetricSpace from_matrix(Eigen::MatrixXd dist,
                                       std::vector<std::string> labels = {},
                                       SpaceValidation validation = {}) {
    FiniteMetricSpace s;
    s.dist_ = std::move(dist);
    s.labels_ = std::move(labels);
    s.validate(validation);
    return s;
  }

  /// Euclidean distances between the rows of `coords`.
  static FiniteMetricSpace from_points(Eigen::MatrixXd coords,
                                       SpaceValidation validation = {}) {
    const Eigen::Index n = coords.rows();
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      d(i, i) = 0.0;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double v = (coords.row(i) - coords.row(j)).norm();
        d(i, j) = v;
        d(j, i) = v;
      }
    }
    FiniteMetricSpace s;
    s.dist_ = std::move(d);
    s.coords_ = std::move(coords);
    s.validate(validation);
    return s;
  }

  /// Skips every check. Only for tests that need to inject degenerate data.
  static FiniteMetricSpace unchecked(Eigen::MatrixXd dist) {
    FiniteMetricSpace s;
    s.dist_ = std::move(dist);
    return s;
  }

  Eigen::Index size() const { return dist_.rows(); }
  const Eigen::MatrixXd& distances() const { return dist_; }
  const std::optional<Eigen::MatrixXd>& coordinates() const { return coords_; }
  const std::vector<std::string>& labels() const { return labels_; }

  FiniteMetricSpace permuted(const std::vector<Eigen::Index>& perm) const {
    const Eigen::Index n = size();
    if (static_cast<Eigen::Index>(perm.size()) != n)
      throw ArgumentError("permuted: permutation length mismatch");
    FiniteMetricSpace s;
    s.dist_.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) s.dist_(i, j) = dist_(perm[i], perm[j]);
    if (coords_) {
      Eigen::MatrixXd c(n, coords_->cols());
      for (Eigen::Index i = 0; i < n; ++i) c.row(i) = coords_->row(perm[i]);
      s.coords_ = std::move(c);
    }
    return s;
  }

  FiniteMetricSpace rescaled(double factor) const {
    if (!(factor > 0.0)) throw ArgumentError("rescaled: factor must be positive");
    FiniteMetricSpace s = *this;
    s.dist_ *= factor;
    if (s.coords_) *s.coords_ *= factor;
    return s;
  }

 private:
  void validate(const SpaceValidation& v) const {
    const Eigen::Index n = dist_.rows();
    if (n == 0) throw ArgumentError("metric space: no points");
    if (dist_.cols() != n) throw ArgumentError("metric space: distance matrix not square");
    if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != n)
      throw ArgumentError("metric space: label count does not match matrix size");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (dist_(i, i) != 0.0) throw ArgumentError("metric space: nonzero diagonal");
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double a = dist_(i, j);
        if (!std::isfinite(a) || a != dist_(j, i))
          throw ArgumentError("metric space: distance matrix not symmetric");
        if (!(a > 0.0))
          throw ArgumentError("metric space: duplicate points (zero distance between " +
                              std::to_string(i) + " and " + std::to_string(j) + ")");
      }
    }
    if (!v.check_triangle) return;
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index i = 0; i < n; ++i) {
        const double dik = dist_(i, k);
        for (Eigen::Index j = 0; j < n; ++j)
          if (dist_(i, j) > dik + dist_(k, j) + v.triangle_slack)
            throw ArgumentError("metric space: triangle inequality violated at (" +
                                std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(k) + ")");
      }
  }

  Eigen::MatrixXd dist_;
  std::optional<Eigen::MatrixXd> coords_;
  std::vector<std::string> labels_;
};

struct SolveOptions {
  double condition_threshold = 1e12;
  double residual_tolerance = 1e-10;  // relative: scaled by N
  int refinement_steps = 3;
};

struct Weighting {
  Eigen::VectorXd weights;
  double scale = 1.0;
  double residual = 0.0;  // max |Z w - 1|
  double condition_estimate = 1.0;
  bool used_cholesky = true;

  double sum() const { return weights.sum(); }
};

/// Z_xy = exp(-R d(x, y)).
inline Eigen::MatrixXd similarity_matrix(const FiniteMetricSpace& space, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw ArgumentError("similarity_matrix: scale must be positive");
  const auto& d = space.distances();
  const Eigen::Index n = d.rows();
  Eigen::MatrixXd z(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) z(i, j) = std::exp(-(scale * d(i, j)));
  return z;
}

namespace detail {

inline double max_abs_residual(const Eigen::MatrixXd& z, const Eigen::VectorXd& w) {
  return ((z * w).array() - 1.0).abs().maxCoeff();
}

}  // namespace detail

/// Solves Z w = 1. Cholesky first; pivoted LU with iterative refinement
/// when Z is not numerically positive definite.
inline Weighting weighting(const FiniteMetricSpace& space, double scale,
                           const SolveOptions& opt = {}) {
  const Eigen::MatrixXd z = similarity_matrix(space, scale);
  const Eigen::Index n = z.rows();
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

  Weighting out;
  out.scale = scale;

  Eigen::LLT<Eigen::MatrixXd> llt(z);
  if (llt.info() == Eigen::Success) {
    const double rc = llt.rcond();
    out.condition_estimate = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (out.condition_estimate > opt.condition_threshold)
      throw SolveError("weighting: similarity matrix numerically singular", out.condition_estimate);
    out.weights = llt.solve(ones);
    for (int k = 0; k < opt.refinement_steps; ++k) {
      const Eigen::VectorXd r = ones - z * out.weights;
      if (r.lpNorm<Eigen::Infinity>() <= 1e-15 * n) break;
      out.weights += llt.solve(r);
    }
    out.used_cholesky = true;
  } else {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(z);
    const double rc = lu.rcond();
    out.condition_estimate = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(out.condition_estimate <= opt.condition_threshold))
      throw SolveError("weighting: similarity matrix numerically singular", out.condition_estimate);
    out.weights = lu.solve(ones);
    for (int k = 0; k < opt.refinement_steps; ++k) {
      const Eigen::VectorXd r = ones - z * out.weights;
      out.weights += lu.solve(r);
    }
    out.used_cholesky = false;
  }
  out.residual = detail::max_abs_residual(z, out.weights);
  if (!(out.residual <= opt.residual_tolerance * static_cast<double>(n)))
    throw SolveError("weighting: residual " + std::to_string(out.residual) + " above tolerance",
                     out.condition_estimate);
  return out;
}

inline double magnitude(const FiniteMetricSpace& space, double scale, const SolveOptions& opt = {}) {
  return weighting(space, scale, opt).sum();
}

struct DefinitenessReport {
  bool positive_definite = false;
  double smallest_eigenvalue = 0.0;
};

/// Cholesky success decides the answer; the eigenvalue is exact for
/// N <= dense_limit and an inverse-iteration estimate above it.
inline DefinitenessReport is_positive_definite(const FiniteMetricSpace& space, double scale,
                                               Eigen::Index dense_limit = 1500) {
  const Eigen::MatrixXd z = similarity_matrix(space, scale);
  DefinitenessReport rep;
  Eigen::LLT<Eigen::MatrixXd> llt(z);
  rep.positive_definite = llt.info() == Eigen::Success;
  if (z.rows() <= dense_limit || !rep.positive_definite) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(z, Eigen::EigenvaluesOnly);
    rep.smallest_eigenvalue = es.eigenvalues()(0);
    return rep;
  }
  Eigen::VectorXd v = Eigen::VectorXd::Ones(z.rows()).normalized();
  double mu = 0.0;
  for (int it = 0; it < 50; ++it) {
    Eigen::VectorXd y = llt.solve(v);
    const double nrm = y.norm();
    const double next = 1.0 / nrm;
    v = y / nrm;
    if (std::abs(next - mu) <= 1e-10 * next) {
      mu = next;
      break;
    }
    mu = next;
  }
  rep.smallest_eigenvalue = mu;
  return rep;
}

// ---------------------------------------------------------------------------
// Point-set text input.
//
//   # comment
//   0.0, 1.0, 2.0        one point per line (Euclidean metric), or
//   matrix 3             an explicit distance block of N rows
//   0 1 2
//   ...
// Separators are whitespace and/or commas.

namespace detail {

inline std::vector<double> split_numbers(const std::string& line) {
  std::string s = line;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ArgumentError("point file: cannot parse number '" + tok + "'");
    }
    if (used != tok.size()) throw ArgumentError("point file: cannot parse number '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string strip_comment(std::string line) {
  if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
  return line;
}

inline bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace detail

inline FiniteMetricSpace read_point_set(std::istream& in, SpaceValidation validation = {}) {
  std::string line;
  std::vector<std::vector<double>> rows;
  std::optional<long> matrix_n;
  while (std::getline(in, line)) {
    line = detail::strip_comment(line);
    if (detail::blank(line)) continue;
    std::istringstream hs(line);
    std::string head;
    hs >> head;
    if (head == "matrix") {
      if (matrix_n || !rows.empty()) throw ArgumentError("point file: unexpected 'matrix' header");
      long n = 0;
      if (!(hs >> n) || n <= 0) throw ArgumentError("point file: bad 'matrix N' header");
      matrix_n = n;
      continue;
    }
    rows.push_back(detail::split_numbers(line));
  }
  if (rows.empty()) throw ArgumentError("point file: no points");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width || width == 0) throw ArgumentError("point file: ragged rows");

  if (matrix_n) {
    const auto n = static_cast<std::size_t>(*matrix_n);
    if (rows.size() != n || width != n)
      throw ArgumentError("point file: matrix block is not " + std::to_string(n) + "x" +
                          std::to_string(n));
    Eigen::MatrixXd d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = rows[i][j];
    return FiniteMetricSpace::from_matrix(std::move(d), {}, validation);
  }
  Eigen::MatrixXd c(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) c(i, j) = rows[i][j];
  return FiniteMetricSpace::from_points(std::move(c), validation);
}

inline FiniteMetricSpace read_point_file(const std::string& path, SpaceValidation validation = {}) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open point file: " + path);
  return read_point_set(f, validation);
}

}  // namespace maglab
