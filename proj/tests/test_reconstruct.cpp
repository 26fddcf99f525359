#include <gtest/gtest.h>

#include "maglab/reconstruct.hpp"
#include "oracle_data.hpp"
#include "support.hpp"

using namespace maglab;
using C = std::complex<double>;

namespace {

const oracle::RootSet& oracle_roots(int n) {
  for (const auto& r : oracle::ball_roots())
    if (r.n == n) return r;
  throw std::runtime_error("no oracle roots for n");
}

// Greedy nearest matching; returns the worst distance.
double match(std::vector<C> got, const std::vector<std::pair<double, double>>& want) {
  if (got.size() != want.size()) return INFINITY;
  double worst = 0.0;
  for (const auto& [re, im] : want) {
    const C w(re, im);
    auto it = std::min_element(got.begin(), got.end(),
                               [&](C a, C b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w) / std::max(1.0, std::abs(w)));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST(Reconstruct, Bounds) {
  EXPECT_EQ(ball_pole_bound(13), 15);
  EXPECT_EQ(ball_pole_bound(17), 28);
  EXPECT_EQ(ball_pole_bound(21), 45);
  EXPECT_EQ(ball_zero_bound(13), 28);
  EXPECT_EQ(ball_zero_bound(21), 66);
}

TEST(Reconstruct, ThreeIsPolynomial) {
  const auto r = rational_reconstruct(3);
  EXPECT_TRUE(r.poles.empty());
  EXPECT_EQ(r.zeros.size(), 3u);
  EXPECT_LE(match(r.zeros, oracle_roots(3).zeros), 1e-12);
  // R^3 + 6R^2 + 12R + 6 = (R + 2)^3 - 2
  double real_zero = 0.0;
  for (C z : r.zeros)
    if (std::abs(z.imag()) < 1e-12) real_zero = z.real();
  EXPECT_NEAR(real_zero, -2.0 + std::cbrt(2.0), 1e-13);
  EXPECT_NEAR(r.model(C(2.0)).real(), 8.0 / 6.0 + 4.0 + 4.0 + 1.0, 1e-10);
}

TEST(Reconstruct, FiveHasSinglePoleAtMinusThree) {
  const auto r = rational_reconstruct(5);
  ASSERT_EQ(r.poles.size(), 1u);
  EXPECT_LE(std::abs(r.poles[0] + 3.0), 1e-8);
  EXPECT_EQ(r.zeros.size(), 6u);
  EXPECT_LE(match(r.zeros, oracle_roots(5).zeros), 1e-8);
  EXPECT_LE(r.heldout_residual, 1e-8);
}

TEST(Reconstruct, MatchesOracleRoots) {
  for (int n : {7, 9, 11}) {
    const auto r = rational_reconstruct(n);
    const auto& o = oracle_roots(n);
    EXPECT_EQ(r.poles.size(), o.poles.size()) << n;
    EXPECT_EQ(r.zeros.size(), o.zeros.size()) << n;
    EXPECT_LE(match(r.poles, o.poles), 1e-8) << n;
    EXPECT_LE(match(r.zeros, o.zeros), 1e-8) << n;
    EXPECT_LE(static_cast<int>(r.poles.size()), ball_pole_bound(n));
    EXPECT_LE(static_cast<int>(r.zeros.size()), ball_zero_bound(n));
    EXPECT_EQ(r.model.num.degree(), r.model.den.degree() + n);
    for (double res : r.pole_residuals) EXPECT_LE(res, 1e-12);
  }
}

TEST(Reconstruct, ModelReproducesExactValues) {
  const auto r = rational_reconstruct(7);
  for (const auto& o : oracle::ball_values()) {
    if (o.n != 7 || std::abs(C(o.r_re, o.r_im)) > 60) continue;
    EXPECT_LE(testing_support::rel_err(r.model(C(o.r_re, o.r_im)), C(o.m_re, o.m_im)), 1e-9);
  }
}

TEST(Reconstruct, OneDimensional) {
  const auto r = rational_reconstruct(1);
  EXPECT_TRUE(r.poles.empty());
  ASSERT_EQ(r.zeros.size(), 1u);
  EXPECT_EQ(r.zeros[0], C(-1.0));
}

TEST(Reconstruct, Arguments) {
  EXPECT_THROW(rational_reconstruct(4), ArgumentError);
  ReconstructionOptions few;
  few.samples = 3;
  EXPECT_THROW(rational_reconstruct(7, few), ArgumentError);
  ReconstructionOptions left;
  left.contour = {C(0.5), 2.0};
  EXPECT_THROW(rational_reconstruct(5, left), ArgumentError);
}

TEST(Reconstruct, ContourChoiceDoesNotMatter) {
  ReconstructionOptions opt;
  opt.contour = {C(4.0), 2.5};
  const auto r = rational_reconstruct(5, opt);
  ASSERT_EQ(r.poles.size(), 1u);
  EXPECT_LE(std::abs(r.poles[0] + 3.0), 1e-8);
}

TEST(Polynomials, RootsAndRebuild) {
  const std::vector<C> roots{C(1.0), C(-2.0, 1.0), C(-2.0, -1.0), C(0.5)};
  const auto p = Polynomial<double>::from_roots(roots, C(3.0));
  auto got = polynomial_roots(p);
  std::vector<std::pair<double, double>> want;
  for (auto z : roots) want.push_back({z.real(), z.imag()});
  EXPECT_LE(match(got, want), 1e-12);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_NEAR(std::abs(p(C(1.0))), 0.0, 1e-12);
}
