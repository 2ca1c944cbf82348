#pragma once

// Euclidean antiprism A_n(a, c) with the mirror-rotational symmetry of
// order 2n about the x3 axis.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "antiprism/error.hpp"
#include "antiprism/minkowski.hpp"
#include "antiprism/types.hpp"

namespace antiprism {

/// Rotation by pi/n about x3 followed by reflection in the x1x2 plane.
/// Maps vertex i to vertex i+1 (mod 2n).
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> euc_symmetry(int n) {
  using std::cos;
  using std::sin;
  const Scalar phi = std::numbers::pi_v<Scalar> / Scalar(n);
  Eigen::Matrix<Scalar, 3, 3> m;
  m << cos(phi), -sin(phi), Scalar(0),
       sin(phi), cos(phi), Scalar(0),
       Scalar(0), Scalar(0), Scalar(-1);
  return m;
}

/// Realizable iff 4c^2 cos^2(pi/2n) - a^2 > 0 (the reported margin).
template <typename Scalar>
ExistenceReport<Scalar> euc_exists(const AntiprismSpec<Scalar>& spec) {
  using std::abs;
  using std::cos;
  validate(spec);
  const Scalar half = cos(std::numbers::pi_v<Scalar> / Scalar(2 * spec.n));
  const Scalar lhs = Scalar(4) * spec.c * spec.c * half * half;
  const Scalar rhs = spec.a * spec.a;
  const Scalar guard = clamp_slack<Scalar>() * (lhs + rhs);

  ExistenceReport<Scalar> report;
  report.margin = lhs - rhs;
  report.on_boundary = abs(report.margin) <= guard;
  report.exists = report.margin > guard;
  report.c0 = spec.a / (Scalar(2) * half);
  return report;
}

template <typename Scalar>
EmbeddingParams<Scalar> euc_params(const AntiprismSpec<Scalar>& spec,
                                   Boundary boundary = Boundary::Reject) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const ExistenceReport<Scalar> ex = euc_exists(spec);
  const bool degenerate = boundary == Boundary::Allow && ex.on_boundary;
  if (!ex.exists && !degenerate) {
    throw Error(ErrorCode::NotRealizable, "no Euclidean antiprism with these edge lengths");
  }
  const Scalar pi = std::numbers::pi_v<Scalar>;
  EmbeddingParams<Scalar> p;
  p.r = spec.a / (Scalar(2) * sin(pi / Scalar(spec.n)));
  // h^2 = c^2 - a^2 / (4 cos^2(pi/2n)) = margin / (4 cos^2(pi/2n))
  p.h = degenerate ? Scalar(0) : sqrt(ex.margin) / (Scalar(2) * cos(pi / Scalar(2 * spec.n)));
  return p;
}

/// Vertex i sits at polar angle i*pi/n, on the top plane (+h/2) for even i
/// and on the bottom plane (-h/2) for odd i.
template <typename Scalar>
std::vector<Vec3<Scalar>> euc_vertices_from_params(int n, const EmbeddingParams<Scalar>& p) {
  using std::cos;
  using std::sin;
  std::vector<Vec3<Scalar>> out;
  out.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    const Scalar phi = Scalar(i) * std::numbers::pi_v<Scalar> / Scalar(n);
    const Scalar z = (i % 2 == 0 ? p.h : -p.h) / Scalar(2);
    out.emplace_back(p.r * cos(phi), p.r * sin(phi), z);
  }
  return out;
}

template <typename Scalar>
std::vector<Vec3<Scalar>> euc_vertices(const AntiprismSpec<Scalar>& spec) {
  return euc_vertices_from_params(spec.n, euc_params(spec));
}

template <typename Scalar>
DihedralAngles<Scalar> euc_angles(const AntiprismSpec<Scalar>& spec) {
  using std::cos;
  using std::sqrt;
  using std::tan;
  if (!euc_exists(spec).exists) {
    throw Error(ErrorCode::NotRealizable, "no Euclidean antiprism with these edge lengths");
  }
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar a2 = spec.a * spec.a;
  const Scalar four_c2 = Scalar(4) * spec.c * spec.c;
  const Scalar cos_a = -spec.a * tan(pi / Scalar(2 * spec.n)) / sqrt(four_c2 - a2);
  const Scalar cos_c = (a2 - four_c2 * cos(pi / Scalar(spec.n))) / (four_c2 - a2);
  return {clamped_acos(cos_a), clamped_acos(cos_c)};
}

/// Closed-form volume n a^2 (2cos(pi/n) + 1) / (24 sin(pi/n) cos(pi/2n)) * sqrt(margin).
template <typename Scalar>
Scalar euc_volume(const AntiprismSpec<Scalar>& spec, Boundary boundary = Boundary::Reject) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const ExistenceReport<Scalar> ex = euc_exists(spec);
  if (!ex.exists) {
    if (boundary == Boundary::Allow && ex.on_boundary) return Scalar(0);
    throw Error(ErrorCode::NotRealizable, "no Euclidean antiprism with these edge lengths");
  }
  const Scalar phi = std::numbers::pi_v<Scalar> / Scalar(spec.n);
  const Scalar n = Scalar(spec.n);
  return n * spec.a * spec.a * (Scalar(2) * cos(phi) + Scalar(1)) /
         (Scalar(24) * sin(phi) * cos(phi / Scalar(2))) * sqrt(ex.margin);
}

template <typename Scalar>
Scalar tetrahedron_volume(const Vec3<Scalar>& p0, const Vec3<Scalar>& p1, const Vec3<Scalar>& p2,
                          const Vec3<Scalar>& p3) {
  return (p1 - p0).cross(p2 - p0).dot(p3 - p0) / Scalar(6);
}

/// Volume of the convex hull of a small point set: every supporting plane
/// is found by brute force over vertex triples, each hull face is ordered
/// around its centroid, and signed tetrahedra from the point centroid are
/// summed over the fanned faces. Returns 0 for coplanar input.
template <typename Scalar>
Scalar hull_volume(const std::vector<Vec3<Scalar>>& pts) {
  using std::abs;
  using std::atan2;
  const std::size_t count = pts.size();
  if (count < 4) return Scalar(0);

  Vec3<Scalar> centroid = Vec3<Scalar>::Zero();
  Scalar scale(0);
  for (const auto& p : pts) {
    centroid += p;
    scale = std::max(scale, p.cwiseAbs().maxCoeff());
  }
  centroid /= Scalar(count);
  const Scalar tol = Scalar(1024) * std::numeric_limits<Scalar>::epsilon() * scale;

  struct Face {
    Vec3<Scalar> normal;
    Scalar offset;
  };
  std::vector<Face> faces;

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      for (std::size_t k = j + 1; k < count; ++k) {
        Vec3<Scalar> normal = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        const Scalar len = normal.norm();
        if (!(len > tol * scale)) continue;
        normal /= len;
        bool above = false;
        bool below = false;
        for (std::size_t l = 0; l < count; ++l) {
          const Scalar d = normal.dot(pts[l] - pts[i]);
          if (d > tol) above = true;
          if (d < -tol) below = true;
        }
        if (!above && !below) return Scalar(0);
        if (above && below) continue;
        if (above) normal = -normal;
        const Scalar offset = normal.dot(pts[i]);
        const bool seen = std::any_of(faces.begin(), faces.end(), [&](const Face& f) {
          return (f.normal - normal).norm() <= Scalar(1e-9) && abs(f.offset - offset) <= tol;
        });
        if (!seen) faces.push_back({normal, offset});
      }
    }
  }

  Scalar volume(0);
  for (const Face& face : faces) {
    std::vector<Vec3<Scalar>> on_face;
    for (const auto& p : pts) {
      if (abs(face.normal.dot(p) - face.offset) <= tol) on_face.push_back(p);
    }
    Vec3<Scalar> mid = Vec3<Scalar>::Zero();
    for (const auto& p : on_face) mid += p;
    mid /= Scalar(on_face.size());
    const Vec3<Scalar> e1 = (on_face.front() - mid).normalized();
    const Vec3<Scalar> e2 = face.normal.cross(e1);
    std::sort(on_face.begin(), on_face.end(), [&](const Vec3<Scalar>& p, const Vec3<Scalar>& q) {
      return atan2((p - mid).dot(e2), (p - mid).dot(e1)) < atan2((q - mid).dot(e2), (q - mid).dot(e1));
    });
    for (std::size_t f = 1; f + 1 < on_face.size(); ++f) {
      volume += tetrahedron_volume(centroid, on_face[0], on_face[f], on_face[f + 1]);
    }
  }
  return volume;
}

/// Volume from vertex coordinates, without the closed form. The solid is
/// cut into n congruent sectors of three tetrahedra each, all coned from
/// the top-face centre B:
///   T1 = B D v[2k+1] v[2k+3]       (D: bottom-face centre)
///   T2 = B v[2k] v[2k+1] v[2k+2]
///   T3 = B v[2k+2] v[2k+1] v[2k+3]
/// and every tetrahedron is measured by its determinant. The result is
/// cross-checked against hull_volume; a disagreement beyond 1e-10 relative
/// raises InternalInvariantViolation.
template <typename Scalar>
Scalar euc_volume_oracle(const AntiprismSpec<Scalar>& spec) {
  using std::abs;
  const EmbeddingParams<Scalar> p = euc_params(spec);
  const std::vector<Vec3<Scalar>> v = euc_vertices_from_params(spec.n, p);
  const int m = 2 * spec.n;
  const Vec3<Scalar> top(Scalar(0), Scalar(0), p.h / Scalar(2));
  const Vec3<Scalar> bottom(Scalar(0), Scalar(0), -p.h / Scalar(2));
  auto at = [&](int i) -> const Vec3<Scalar>& { return v[((i % m) + m) % m]; };

  Scalar volume(0);
  for (int k = 0; k < spec.n; ++k) {
    volume += abs(tetrahedron_volume(top, bottom, at(2 * k + 1), at(2 * k + 3)));
    volume += abs(tetrahedron_volume(top, at(2 * k), at(2 * k + 1), at(2 * k + 2)));
    volume += abs(tetrahedron_volume(top, at(2 * k + 2), at(2 * k + 1), at(2 * k + 3)));
  }

  const Scalar hull = hull_volume(v);
  if (!(abs(hull - volume) <= Scalar(1e-10) * abs(volume))) {
    throw Error(ErrorCode::InternalInvariantViolation, "sector decomposition disagrees with hull volume");
  }
  return volume;
}

}  // namespace antiprism
