#include <gtest/gtest.h>

#include <sstream>

#include "maglab/geometry.hpp"
#include "support.hpp"

using namespace maglab;

namespace {
const double pi = std::numbers::pi;
}

TEST(Mesh, CubeInvariants) {
  const auto inv = invariants_from_mesh(cube_mesh(1.0));
  EXPECT_NEAR(inv.volume, 1.0, 1e-14);
  EXPECT_NEAR(inv.area, 6.0, 1e-14);
  // 12 edges of length 1, dihedral pi/2: (1/2) * 12 * pi/2
  EXPECT_NEAR(inv.total_mean_curvature, 3.0 * pi, 1e-12);
  EXPECT_FALSE(inv.warnings.empty());
}

TEST(Mesh, RegularTetrahedron) {
  const auto m = read_off_file(testing_support::sample_path("data/tetra.off"));
  const auto inv = invariants_from_mesh(m);
  // edge 2 sqrt 2: volume a^3 / (6 sqrt 2) = 8/3, area sqrt 3 a^2 = 8 sqrt 3
  const double a = 2.0 * std::sqrt(2.0);
  EXPECT_NEAR(inv.volume, 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(inv.area, std::sqrt(3.0) * a * a, 1e-12);
  const double dihedral = std::acos(1.0 / 3.0);
  EXPECT_NEAR(inv.total_mean_curvature, 0.5 * 6 * a * (pi - dihedral), 1e-12);
}

TEST(Mesh, FlippedRejected) { EXPECT_THROW(invariants_from_mesh(cube_mesh(1.0).flipped()), MeshError); }

TEST(Mesh, OpenAndDegenerateRejected) {
  auto open = cube_mesh(1.0);
  open.triangles.pop_back();
  EXPECT_THROW(open.validate(), MeshError);
  auto bad = cube_mesh(1.0);
  bad.triangles[0] = {0, 0, 1};
  EXPECT_THROW(bad.validate(), MeshError);
  auto missing = cube_mesh(1.0);
  missing.triangles[0][0] = 99;
  EXPECT_THROW(missing.validate(), MeshError);
}

TEST(Mesh, OffParsing) {
  std::istringstream junk("OFF\n3 x 0\n");
  EXPECT_THROW(read_off(junk), MeshError);
  std::istringstream noheader("4 4 0\n");
  EXPECT_THROW(read_off(noheader), MeshError);
  std::istringstream shortfile("OFF\n4 4 0\n0 0 0\n");
  EXPECT_THROW(read_off(shortfile), MeshError);
  EXPECT_THROW(read_off_file("/nonexistent.off"), MeshError);
}

TEST(Mesh, OffRoundTrip) {
  const auto m = icosphere(1);
  std::stringstream s;
  write_off(s, m);
  const auto back = read_off(s);
  ASSERT_EQ(back.triangles.size(), m.triangles.size());
  EXPECT_DOUBLE_EQ(invariants_from_mesh(back).volume, invariants_from_mesh(m).volume);
}

TEST(Mesh, IcosphereConverges) {
  const double want[] = {4.0 * pi / 3.0, 4.0 * pi, 4.0 * pi};
  double prev[3] = {0, 0, 0};
  double prev_h = 0;
  for (int l = 0; l <= 4; ++l) {
    const auto m = icosphere(l);
    const auto inv = invariants_from_mesh(m);
    const double err[] = {std::abs(inv.volume - want[0]), std::abs(inv.area - want[1]),
                          std::abs(inv.total_mean_curvature - want[2])};
    const double h = m.edge_length();
    if (l >= 2)
      for (int k = 0; k < 3; ++k) EXPECT_GE(std::log(prev[k] / err[k]) / std::log(prev_h / h), 1.5) << l << k;
    for (int k = 0; k < 3; ++k) prev[k] = err[k];
    prev_h = h;
    if (l >= 1) EXPECT_TRUE(inv.warnings.empty()) << l;
  }
  const auto inv4 = invariants_from_mesh(icosphere(4));
  EXPECT_NEAR(inv4.volume / want[0], 1.0, 0.005);
  EXPECT_NEAR(inv4.area / want[1], 1.0, 0.005);
  EXPECT_NEAR(inv4.total_mean_curvature / want[2], 1.0, 0.005);
}

TEST(Mesh, ScalingLaws) {
  const auto a = invariants_from_mesh(icosphere(2, 1.0));
  const auto b = invariants_from_mesh(icosphere(2, 3.0));
  EXPECT_NEAR(b.volume / a.volume, 27.0, 1e-10);
  EXPECT_NEAR(b.area / a.area, 9.0, 1e-10);
  EXPECT_NEAR(b.total_mean_curvature / a.total_mean_curvature, 3.0, 1e-10);
}

TEST(Analytic, BallAndShell) {
  const auto ball = invariants_analytic(DomainShape::ball(3, 1.0));
  EXPECT_NEAR(ball.volume, 4.0 * pi / 3.0, 1e-14);
  EXPECT_NEAR(ball.area, 4.0 * pi, 1e-14);
  EXPECT_NEAR(ball.total_mean_curvature, 4.0 * pi, 1e-14);
  const auto shell = invariants_analytic(DomainShape::shell(1.0, 2.0));
  EXPECT_NEAR(shell.volume, 28.0 * pi / 3.0, 1e-12);
  EXPECT_NEAR(shell.area, 20.0 * pi, 1e-12);
  EXPECT_NEAR(shell.total_mean_curvature, 4.0 * pi, 1e-12);
  EXPECT_THROW(invariants_analytic(DomainShape::box({1.0, 1.0, 1.0})), UnsupportedError);
}

TEST(Asymptotic, Polynomials) {
  const auto shell = asymptotic_polynomial(invariants_analytic(DomainShape::shell(1.0, 2.0)));
  EXPECT_NEAR(shell.leading[0], 7.0 / 6.0, 1e-14);
  EXPECT_NEAR(shell.leading[1], 5.0, 1e-14);
  EXPECT_NEAR(shell.leading[2], 2.0, 1e-14);
  for (int n : {3, 5, 7, 9}) {
    const int m = (n + 1) / 2;
    const double nf = std::tgamma(n + 1.0);
    const auto p = asymptotic_polynomial(invariants_analytic(DomainShape::ball(n, 1.0)));
    EXPECT_NEAR(p.leading[0] * nf, 1.0, 1e-12);
    EXPECT_NEAR(p.leading[1] * nf, n * (n + 1) / 2.0, 1e-10);
    EXPECT_NEAR(p.leading[2] * nf, n * m * m * (n - 1) / 2.0, 1e-9);
  }
  GeometricInvariants even;
  even.n = 4;
  EXPECT_THROW(asymptotic_polynomial(even), UnsupportedError);
}

TEST(Asymptotic, ConjecturePolynomial) {
  const auto b3 = conjecture_polynomial(DomainShape::ball(3, 1.0));
  const double want[] = {1.0, 2.0, 1.0, 1.0 / 6.0};
  for (int i = 0; i <= 3; ++i) EXPECT_NEAR(b3.full[i], want[i], 1e-14) << i;
  // unit cube: V_i = binom(3, i), divided by i! w_i
  const auto cube = conjecture_polynomial(DomainShape::box({1.0, 1.0, 1.0}));
  EXPECT_NEAR(cube.full[3], 1.0 / (8.0 * pi), 1e-14);
  EXPECT_NEAR(cube.full[1], 3.0 / 2.0, 1e-14);
  EXPECT_THROW(conjecture_polynomial(DomainShape::shell(1.0, 2.0)), ArgumentError);
}

TEST(Asymptotic, IntrinsicVolumesOfBall) {
  const auto v = intrinsic_volumes(DomainShape::ball(3, 1.0));
  EXPECT_NEAR(v[0], 1.0, 1e-14);
  EXPECT_NEAR(v[1], 4.0, 1e-14);
  EXPECT_NEAR(v[2], 2.0 * pi, 1e-14);
  EXPECT_NEAR(v[3], 4.0 * pi / 3.0, 1e-14);
}
