#pragma once

// Small dense complex linear algebra, generic in the real type so the
// radial solver and the rational fits can run in extended precision.
// Eigen covers the double-precision finite-space solves; these routines
// cover m x m trace systems (m <= a few dozen) and tall least squares.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "maglab/common.hpp"

namespace maglab::dense {

template <class T>
class Matrix {
 public:
  using Complex = std::complex<T>;
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> data_;
};

template <class T>
T abs1(const std::complex<T>& z) {
  using std::abs;
  return abs(z.real()) + abs(z.imag());
}

/// LU factorization with partial pivoting, PA = LU.
template <class T>
class LU {
 public:
  using Complex = std::complex<T>;

  explicit LU(Matrix<T> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw ArgumentError("LU: matrix not square");
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      T best = abs1(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i)
        if (abs1(lu_(i, k)) > best) {
          best = abs1(lu_(i, k));
          p = i;
        }
      if (best == T(0)) {
        singular_ = true;
        continue;
      }
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        std::swap(perm_[k], perm_[p]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex f = lu_(i, k) / lu_(k, k);
        lu_(i, k) = f;
        if (f == Complex(0)) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  bool singular() const { return singular_; }

  std::vector<Complex> solve(const std::vector<Complex>& b) const {
    const std::size_t n = lu_.rows();
    if (singular_) throw SolveError("LU: singular matrix", std::numeric_limits<double>::infinity());
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
      x[i] = s / lu_(i, i);
    }
    return x;
  }

  Matrix<T> inverse() const {
    const std::size_t n = lu_.rows();
    Matrix<T> inv(n, n);
    std::vector<Complex> e(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(e.begin(), e.end(), Complex(0));
      e[j] = Complex(1);
      const auto col = solve(e);
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
  }

 private:
  Matrix<T> lu_;
  std::vector<std::size_t> perm_;
  bool singular_ = false;
};

template <class T>
T norm1(const Matrix<T>& a) {
  T best(0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    T s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      using std::abs;
      s += abs(a(i, j));
    }
    best = std::max(best, s);
  }
  return best;
}

/// 1-norm condition number after row and column equilibration (the number
/// that matters for a system whose rows carry different powers of R).
/// Returns +inf for exactly singular input.
template <class T>
double equilibrated_condition(Matrix<T> a) {
  using std::abs;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    T s(0);
    for (std::size_t j = 0; j < n; ++j) s = std::max<T>(s, abs(a(i, j)));
    if (s == T(0)) return std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) a(i, j) /= s;
  }
  for (std::size_t j = 0; j < n; ++j) {
    T s(0);
    for (std::size_t i = 0; i < n; ++i) s = std::max<T>(s, abs(a(i, j)));
    if (s == T(0)) return std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) a(i, j) /= s;
  }
  LU<T> lu(a);
  if (lu.singular()) return std::numeric_limits<double>::infinity();
  const T c = norm1(a) * norm1(lu.inverse());
  return static_cast<double>(c);
}

/// Least squares min ||A x - b|| by Householder QR (A tall, full column
/// rank). Columns are scaled to unit max-norm first.
template <class T>
std::vector<std::complex<T>> least_squares(Matrix<T> a, std::vector<std::complex<T>> b) {
  using Complex = std::complex<T>;
  using std::abs;
  using std::sqrt;
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n) throw ArgumentError("least_squares: underdetermined system");
  std::vector<T> colscale(n, T(1));
  for (std::size_t j = 0; j < n; ++j) {
    T s(0);
    for (std::size_t i = 0; i < m; ++i) s = std::max<T>(s, abs(a(i, j)));
    if (s > T(0)) {
      colscale[j] = s;
      for (std::size_t i = 0; i < m; ++i) a(i, j) /= s;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    T nrm2(0);
    for (std::size_t i = k; i < m; ++i) nrm2 += std::norm(a(i, k));
    const T nrm = sqrt(nrm2);
    if (nrm == T(0)) throw SolveError("least_squares: rank deficient", std::numeric_limits<double>::infinity());
    const T akk = abs(a(k, k));
    const Complex phase = akk == T(0) ? Complex(1) : a(k, k) / akk;
    const Complex alpha = -phase * nrm;
    // v = x - alpha e1, stored in place; beta = 1 / (v^H x) style update.
    a(k, k) -= alpha;
    T vnorm2(0);
    for (std::size_t i = k; i < m; ++i) vnorm2 += std::norm(a(i, k));
    if (vnorm2 > T(0)) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Complex s(0);
        for (std::size_t i = k; i < m; ++i) s += std::conj(a(i, k)) * a(i, j);
        s = s * Complex(T(2) / vnorm2);
        for (std::size_t i = k; i < m; ++i) a(i, j) -= s * a(i, k);
      }
      Complex s(0);
      for (std::size_t i = k; i < m; ++i) s += std::conj(a(i, k)) * b[i];
      s = s * Complex(T(2) / vnorm2);
      for (std::size_t i = k; i < m; ++i) b[i] -= s * a(i, k);
    }
    a(k, k) = alpha;
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  for (std::size_t j = 0; j < n; ++j) x[j] /= colscale[j];
  return x;
}

}  // namespace maglab::dense
