#pragma once

// Volume, boundary area and total mean curvature of domains, analytically
// or from closed triangle meshes, and the leading large-R magnitude
// coefficients they determine:
//   n! w_n M_X(R) ~ vol(X) R^n + m area(dX) R^{n-1}
//                 + (m^2/2)(n-1) (int_{dX} H) R^{n-2} + ...
// H is the mean (average) of the principal curvatures w.r.t. the outward
// normal of X, so an inner shell sphere of radius a has H = -1/a.

#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "maglab/cloud.hpp"
#include "maglab/common.hpp"

namespace maglab {

struct GeometricInvariants {
  int n = 3;
  double volume = 0.0;
  double area = 0.0;
  double total_mean_curvature = 0.0;
  std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// Meshes

struct SurfaceMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;

  static constexpr double kMinTriangleArea = 1e-14;

  double triangle_area(const std::array<int, 3>& t) const {
    return 0.5 * (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
  }

  /// Closed, consistently oriented, non-degenerate, outward (positive volume).
  void validate() const {
    if (vertices.empty() || triangles.size() < 4) throw MeshError("mesh: too few faces for a closed surface");
    std::map<std::pair<int, int>, int> directed;
    for (std::size_t f = 0; f < triangles.size(); ++f) {
      const auto& t = triangles[f];
      for (int k = 0; k < 3; ++k) {
        if (t[k] < 0 || t[k] >= static_cast<int>(vertices.size()))
          throw MeshError("mesh: triangle " + std::to_string(f) + " references a missing vertex");
      }
      if (triangle_area(t) <= kMinTriangleArea)
        throw MeshError("mesh: triangle " + std::to_string(f) + " is degenerate");
      for (int k = 0; k < 3; ++k) {
        const auto e = std::make_pair(t[k], t[(k + 1) % 3]);
        if (++directed[e] > 1) throw MeshError("mesh: inconsistent orientation or non-manifold edge");
      }
    }
    for (const auto& [e, count] : directed)
      if (!directed.count({e.second, e.first})) throw MeshError("mesh: open boundary (edge with one face)");
    if (!(signed_volume() > 0.0)) throw MeshError("mesh: inward orientation (negative enclosed volume)");
  }

  double signed_volume() const {
    double v = 0.0;
    for (const auto& t : triangles) v += vertices[t[0]].dot(vertices[t[1]].cross(vertices[t[2]]));
    return v / 6.0;
  }

  SurfaceMesh flipped() const {
    SurfaceMesh m = *this;
    for (auto& t : m.triangles) std::swap(t[1], t[2]);
    return m;
  }

  /// Mean edge length.
  double edge_length() const {
    double s = 0.0;
    for (const auto& t : triangles)
      for (int k = 0; k < 3; ++k) s += (vertices[t[(k + 1) % 3]] - vertices[t[k]]).norm();
    return s / (3.0 * triangles.size());
  }
};

inline SurfaceMesh read_off(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  std::size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= tokens.size()) throw MeshError("OFF: unexpected end of input");
    return tokens[pos++];
  };
  auto next_num = [&]<class N>(N) {
    const std::string& s = next();
    std::size_t used = 0;
    N v{};
    try {
      if constexpr (std::is_integral_v<N>)
        v = static_cast<N>(std::stol(s, &used));
      else
        v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw MeshError("OFF: malformed number '" + s + "'");
    return v;
  };
  if (next() != "OFF") throw MeshError("OFF: missing 'OFF' header");
  const long nv = next_num(0L), nf = next_num(0L);
  next_num(0L);  // edge count, unused
  if (nv <= 0 || nf <= 0) throw MeshError("OFF: empty mesh");
  SurfaceMesh m;
  m.vertices.resize(nv);
  for (long i = 0; i < nv; ++i)
    for (int k = 0; k < 3; ++k) m.vertices[i][k] = next_num(0.0);
  m.triangles.resize(nf);
  for (long f = 0; f < nf; ++f) {
    if (next_num(0L) != 3) throw MeshError("OFF: only triangular faces are supported");
    for (int k = 0; k < 3; ++k) m.triangles[f][k] = static_cast<int>(next_num(0L));
  }
  return m;
}

inline SurfaceMesh read_off_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file '" + path + "'");
  return read_off(in);
}

inline void write_off(std::ostream& out, const SurfaceMesh& m) {
  out << "OFF\n" << m.vertices.size() << ' ' << m.triangles.size() << " 0\n";
  out.precision(17);
  for (const auto& v : m.vertices) out << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& t : m.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

/// Icosahedron subdivided `levels` times (4-to-1), projected to the sphere.
inline SurfaceMesh icosphere(int levels, double radius = 1.0) {
  if (levels < 0) throw ArgumentError("icosphere: negative subdivision level");
  if (!(radius > 0.0)) throw ArgumentError("icosphere: radius must be positive");
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  SurfaceMesh m;
  m.vertices = {{-1, p, 0}, {1, p, 0}, {-1, -p, 0}, {1, -p, 0}, {0, -1, p}, {0, 1, p},
                {0, -1, -p}, {0, 1, -p}, {p, 0, -1}, {p, 0, 1}, {-p, 0, -1}, {-p, 0, 1}};
  m.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                 {11, 10, 2}, {10, 7, 6}, {7, 1, 8}, {3, 9, 4},   {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
                 {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},   {9, 8, 1}};
  for (auto& v : m.vertices) v.normalize();
  for (int l = 0; l < levels; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      if (auto it = mid.find(key); it != mid.end()) return it->second;
      m.vertices.push_back((m.vertices[a] + m.vertices[b]).normalized());
      return mid[key] = static_cast<int>(m.vertices.size()) - 1;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(m.triangles.size() * 4);
    for (const auto& t : m.triangles) {
      const int a = midpoint(t[0], t[1]), b = midpoint(t[1], t[2]), c = midpoint(t[2], t[0]);
      next.push_back({t[0], a, c});
      next.push_back({t[1], b, a});
      next.push_back({t[2], c, b});
      next.push_back({a, b, c});
    }
    m.triangles = std::move(next);
  }
  for (auto& v : m.vertices) v *= radius;
  return m;
}

/// Axis-aligned cube [0, side]^3, two triangles per face, outward winding.
inline SurfaceMesh cube_mesh(double side = 1.0) {
  if (!(side > 0.0)) throw ArgumentError("cube_mesh: side must be positive");
  SurfaceMesh m;
  for (int i = 0; i < 8; ++i) m.vertices.emplace_back(side * (i & 1), side * ((i >> 1) & 1), side * ((i >> 2) & 1));
  const int quads[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  for (const auto& q : quads) {
    m.triangles.push_back({q[0], q[1], q[2]});
    m.triangles.push_back({q[0], q[2], q[3]});
  }
  return m;
}

/// Dihedral angle above which an edge counts as a crease.
inline constexpr double kSharpEdgeAngle = 0.5;

inline GeometricInvariants invariants_from_mesh(const SurfaceMesh& mesh) {
  mesh.validate();
  GeometricInvariants inv;
  inv.n = 3;
  inv.volume = mesh.signed_volume();
  std::vector<Eigen::Vector3d> normals(mesh.triangles.size());
  std::map<std::pair<int, int>, std::size_t> face_of;  // directed edge -> face
  for (std::size_t f = 0; f < mesh.triangles.size(); ++f) {
    const auto& t = mesh.triangles[f];
    const auto& v = mesh.vertices;
    normals[f] = (v[t[1]] - v[t[0]]).cross(v[t[2]] - v[t[0]]).normalized();
    inv.area += mesh.triangle_area(t);
    for (int k = 0; k < 3; ++k) face_of[{t[k], t[(k + 1) % 3]}] = f;
  }
  double h = 0.0, sharpest = 0.0;
  for (const auto& [e, f1] : face_of) {
    if (e.first > e.second) continue;  // each undirected edge once
    const std::size_t f2 = face_of.at({e.second, e.first});
    const Eigen::Vector3d& n1 = normals[f1];
    const Eigen::Vector3d& n2 = normals[f2];
    double theta = std::atan2(n1.cross(n2).norm(), n1.dot(n2));
    // Convex when the far vertex of f2 lies below the plane of f1.
    const auto& t2 = mesh.triangles[f2];
    int far = t2[0];
    for (int k = 0; k < 3; ++k)
      if (t2[k] != e.first && t2[k] != e.second) far = t2[k];
    if ((mesh.vertices[far] - mesh.vertices[e.first]).dot(n1) > 0.0) theta = -theta;
    const double len = (mesh.vertices[e.second] - mesh.vertices[e.first]).norm();
    h += len * theta;
    sharpest = std::max(sharpest, std::abs(theta));
  }
  inv.total_mean_curvature = 0.5 * h;
  if (sharpest > kSharpEdgeAngle) {
    std::ostringstream os;
    os << "mesh has creases (max dihedral " << sharpest
       << " rad); the asymptotic coefficients assume a smooth boundary";
    inv.warnings.push_back(os.str());
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Analytic invariants and polynomials

inline GeometricInvariants invariants_analytic(const DomainShape& shape) {
  shape.validate();
  const double pi = std::numbers::pi;
  GeometricInvariants inv;
  inv.n = shape.n;
  switch (shape.kind) {
    case ShapeKind::ball: {
      const int n = shape.n;
      const double w = unit_ball_volume(n), r = shape.radius;
      inv.volume = w * std::pow(r, n);
      inv.area = n * w * std::pow(r, n - 1);
      inv.total_mean_curvature = n * w * std::pow(r, n - 2);
      return inv;
    }
    case ShapeKind::shell: {
      const double a = shape.inner, b = shape.outer;
      inv.volume = 4.0 * pi / 3.0 * (b * b * b - a * a * a);
      inv.area = 4.0 * pi * (a * a + b * b);
      // outer sphere H = 1/b, inner sphere H = -1/a
      inv.total_mean_curvature = 4.0 * pi * b + (-1.0) * 4.0 * pi * a;
      return inv;
    }
    case ShapeKind::box:
      throw UnsupportedError("invariants: a box has no smooth boundary");
    case ShapeKind::point_file:
      break;
  }
  throw UnsupportedError("invariants: no analytic invariants for point files");
}

enum class Provenance { invariants, conjecture };

inline std::string to_string(Provenance p) { return p == Provenance::invariants ? "invariants" : "conjecture"; }

struct AsymptoticPolynomial {
  int n = 3;
  std::array<double, 3> leading{};  // coefficients of R^n, R^{n-1}, R^{n-2}
  std::vector<double> full;         // ascending, degree 0..n (conjecture only)
  Provenance provenance = Provenance::invariants;

  double evaluate_leading(double R) const {
    return leading[0] * std::pow(R, n) + leading[1] * std::pow(R, n - 1) + leading[2] * std::pow(R, n - 2);
  }
};

inline AsymptoticPolynomial asymptotic_polynomial(const GeometricInvariants& inv) {
  if (inv.n < 1 || inv.n % 2 == 0) throw UnsupportedError("asymptotic polynomial: n must be odd");
  const int n = inv.n;
  const double m = (n + 1) / 2.0;
  const double norm = magnitude_normalizer(n);
  AsymptoticPolynomial p;
  p.n = n;
  p.leading = {inv.volume / norm, m * inv.area / norm, 0.5 * m * m * (n - 1) * inv.total_mean_curvature / norm};
  return p;
}

/// Intrinsic volumes V_0..V_n of a convex shape (ball or box).
inline std::vector<double> intrinsic_volumes(const DomainShape& shape) {
  shape.validate();
  const int n = shape.n;
  std::vector<double> v(n + 1, 0.0);
  if (shape.kind == ShapeKind::ball) {
    for (int j = 0; j <= n; ++j)
      v[j] = binomial(n, j) * unit_ball_volume(n) / unit_ball_volume(n - j) * std::pow(shape.radius, j);
    return v;
  }
  if (shape.kind == ShapeKind::box) {
    // elementary symmetric polynomials of the side lengths
    v[0] = 1.0;
    for (double s : shape.sides)
      for (int j = n; j >= 1; --j) v[j] += s * v[j - 1];
    return v;
  }
  throw ArgumentError("intrinsic volumes: shape is not convex or has no closed form");
}

/// sum_i V_i(X) R^i / (i! w_i).
inline AsymptoticPolynomial conjecture_polynomial(const DomainShape& shape) {
  const auto v = intrinsic_volumes(shape);
  const int n = shape.n;
  AsymptoticPolynomial p;
  p.n = n;
  p.provenance = Provenance::conjecture;
  p.full.resize(n + 1);
  for (int i = 0; i <= n; ++i) p.full[i] = v[i] / magnitude_normalizer(i);
  p.leading = {p.full[n], n >= 1 ? p.full[n - 1] : 0.0, n >= 2 ? p.full[n - 2] : 0.0};
  return p;
}

}  // namespace maglab
