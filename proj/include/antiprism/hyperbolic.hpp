#pragma once

// Compact hyperbolic antiprism A_n(a, c) in the Cayley-Klein model:
// existence, embedding, vertices, dihedral angles and their derivatives
// along the lateral edge length.

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "antiprism/error.hpp"
#include "antiprism/euclidean.hpp"
#include "antiprism/minkowski.hpp"
#include "antiprism/types.hpp"

namespace antiprism {

/// Edge lengths above this are rejected: the margin expressions lose all
/// significant digits well before cosh overflows.
inline constexpr double kMaxHyperbolicLength = 25.0;

namespace detail {

template <typename Scalar>
void check_hyperbolic_input(const AntiprismSpec<Scalar>& spec) {
  validate(spec);
  if (spec.a > Scalar(kMaxHyperbolicLength) || spec.c > Scalar(kMaxHyperbolicLength)) {
    throw Error(ErrorCode::OverflowGuard, "hyperbolic edge lengths are limited to 25");
  }
}

/// cosh(x) - 1 without cancellation.
template <typename Scalar>
Scalar cosh_m1(Scalar x) {
  using std::sinh;
  const Scalar s = sinh(x / Scalar(2));
  return Scalar(2) * s * s;
}

template <typename Scalar>
Scalar cos_pi_over(int n) {
  using std::cos;
  return cos(std::numbers::pi_v<Scalar> / Scalar(n));
}

/// R(t) of the volume integrand, factored as
///   R = [2(1+k)(cosh t - cosh c0)] * [2(1-k)(cosh t - 1) + (cosh a - 1) + 4(1-k)]
/// with k = cos(pi/n) and cosh t - cosh c0 = 2 sinh((t+c0)/2) sinh((t-c0)/2).
/// `t_minus_c0` is passed separately so callers holding it exactly (the
/// substituted integrand) do not lose it to cancellation.
template <typename Scalar>
Scalar radicand(int n, Scalar a, Scalar c0, Scalar t, Scalar t_minus_c0) {
  using std::sinh;
  const Scalar k = cos_pi_over<Scalar>(n);
  const Scalar near = Scalar(4) * (Scalar(1) + k) * sinh((t + c0) / Scalar(2)) * sinh(t_minus_c0 / Scalar(2));
  const Scalar far = Scalar(2) * (Scalar(1) - k) * cosh_m1(t) + cosh_m1(a) + Scalar(4) * (Scalar(1) - k);
  return near * far;
}

}  // namespace detail

/// Existence test: the antiprism exists iff
///   1 + cosh a - 2 cosh c + 2(1 - cosh c) cos(pi/n) < 0.
/// The margin is evaluated as 2 sinh^2(a/2) - 4(1 + cos(pi/n)) sinh^2(c/2),
/// which is the same quantity. Values within rounding of zero are reported
/// as the flattening boundary.
template <typename Scalar>
ExistenceReport<Scalar> hyp_exists(const AntiprismSpec<Scalar>& spec) {
  using std::abs;
  using std::log1p;
  using std::sqrt;
  detail::check_hyperbolic_input(spec);
  const Scalar k = detail::cos_pi_over<Scalar>(spec.n);
  const Scalar edge = detail::cosh_m1(spec.a);
  const Scalar lateral = Scalar(2) * (Scalar(1) + k) * detail::cosh_m1(spec.c);
  const Scalar guard = clamp_slack<Scalar>() * (edge + lateral);

  ExistenceReport<Scalar> report;
  report.margin = edge - lateral;
  report.on_boundary = abs(report.margin) <= guard;
  report.exists = report.margin < -guard;
  // cosh c0 - 1 = (cosh a - 1) / (2 (1 + cos(pi/n)))
  const Scalar d = edge / (Scalar(2) * (Scalar(1) + k));
  report.c0 = log1p(d + sqrt(d * (d + Scalar(2))));
  return report;
}

/// Threshold c0(n, a) alone.
template <typename Scalar>
Scalar hyp_c0(int n, Scalar a) {
  return hyp_exists(AntiprismSpec<Scalar>{n, a, a}).c0;
}

/// Embedding parameters of the Cayley-Klein realization:
///   r^2 = (cosh a - 1) / (D cos^2(pi/2n))
///   h^2 = -4 margin tan^2(pi/2n) / D
/// with D = 1 + cosh a + 2cosh c - 2(1 + cosh c)cos(pi/n) > 0.
template <typename Scalar>
EmbeddingParams<Scalar> hyp_params(const AntiprismSpec<Scalar>& spec,
                                   Boundary boundary = Boundary::Reject) {
  using std::cos;
  using std::sqrt;
  using std::tan;
  const ExistenceReport<Scalar> ex = hyp_exists(spec);
  const bool degenerate = boundary == Boundary::Allow && ex.on_boundary;
  if (!ex.exists && !degenerate) {
    throw Error(ErrorCode::NotRealizable, "no compact hyperbolic antiprism with these edge lengths");
  }
  const Scalar half = std::numbers::pi_v<Scalar> / Scalar(2 * spec.n);
  const Scalar k = detail::cos_pi_over<Scalar>(spec.n);
  const Scalar edge = detail::cosh_m1(spec.a);
  const Scalar denom = edge + Scalar(2) * (Scalar(1) - k) * (detail::cosh_m1(spec.c) + Scalar(2));
  const Scalar cos_half = cos(half);
  const Scalar tan_half = tan(half);

  EmbeddingParams<Scalar> p;
  p.r = sqrt(edge / (denom * cos_half * cos_half));
  p.h = degenerate ? Scalar(0)
                   : sqrt(Scalar(-4) * ex.margin * tan_half * tan_half / denom);
  if (!(p.r * p.r + p.h * p.h / Scalar(4) < Scalar(1))) {
    throw Error(ErrorCode::InternalInvariantViolation, "embedding leaves the model ball");
  }
  return p;
}

/// (cosh a, cosh c) measured from embedding parameters:
///   cosh a = (4 - h^2 - 4r^2 cos(2pi/n)) / (4 - h^2 - 4r^2)
///   cosh c = (4 + h^2 - 4r^2 cos(pi/n))  / (4 - h^2 - 4r^2)
template <typename Scalar>
std::pair<Scalar, Scalar> hyp_edge_cosh(int n, const EmbeddingParams<Scalar>& p) {
  using std::cos;
  const Scalar phi = std::numbers::pi_v<Scalar> / Scalar(n);
  const Scalar r2 = p.r * p.r;
  const Scalar h2 = p.h * p.h;
  const Scalar den = Scalar(4) - h2 - Scalar(4) * r2;
  return {(Scalar(4) - h2 - Scalar(4) * r2 * cos(Scalar(2) * phi)) / den,
          (Scalar(4) + h2 - Scalar(4) * r2 * cos(phi)) / den};
}

/// 4x4 lift of the mirror rotation, acting on (x1, x2, x3, x4).
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> hyp_symmetry(int n) {
  Eigen::Matrix<Scalar, 4, 4> m = Eigen::Matrix<Scalar, 4, 4>::Identity();
  m.template topLeftCorner<3, 3>() = euc_symmetry<Scalar>(n);
  return m;
}

template <typename Scalar>
std::vector<MinkowskiVec<Scalar>> hyp_vertices_from_params(int n, const EmbeddingParams<Scalar>& p) {
  std::vector<MinkowskiVec<Scalar>> out;
  out.reserve(2 * n);
  for (const Vec3<Scalar>& v : euc_vertices_from_params(n, p)) out.push_back(model_point(v));
  return out;
}

/// The 2n vertices in K, same ordering as the Euclidean embedding.
template <typename Scalar>
std::vector<MinkowskiVec<Scalar>> hyp_vertices(const AntiprismSpec<Scalar>& spec) {
  return hyp_vertices_from_params(spec.n, hyp_params(spec));
}

/// Angle cosines in terms of the edge lengths:
///   cos A = -sqrt(cosh a - 1)(1 + cosh a - 2cosh c cos(pi/n))
///           / sqrt(2(1 + cosh a - 2cosh^2 c)(cos(2pi/n) - cosh a))
///   cos C = (cosh c - cosh a cosh c + 2(cosh^2 c - 1)cos(pi/n)) / (1 + cosh a - 2cosh^2 c)
template <typename Scalar>
std::pair<Scalar, Scalar> hyp_angle_cosines(const AntiprismSpec<Scalar>& spec) {
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  if (!hyp_exists(spec).exists) {
    throw Error(ErrorCode::NotRealizable, "no compact hyperbolic antiprism with these edge lengths");
  }
  const Scalar k = detail::cos_pi_over<Scalar>(spec.n);
  const Scalar edge = detail::cosh_m1(spec.a);
  const Scalar ch = cosh(spec.c);
  const Scalar sh = sinh(spec.c);
  const Scalar s = sin(std::numbers::pi_v<Scalar> / Scalar(spec.n));

  // 1 + cosh a - 2cosh^2 c
  const Scalar den = edge - Scalar(2) * sh * sh;
  if (!(den < Scalar(0))) {
    throw Error(ErrorCode::InternalInvariantViolation, "1 + cosh a - 2cosh^2 c must be negative");
  }
  // cos(2pi/n) - cosh a
  const Scalar cos2_minus = Scalar(-2) * s * s - edge;
  const Scalar cos_a =
      -sqrt(edge) * (Scalar(2) + edge - Scalar(2) * ch * k) / sqrt(Scalar(2) * den * cos2_minus);
  const Scalar cos_c = (Scalar(2) * sh * sh * k - ch * edge) / den;
  return {cos_a, cos_c};
}

template <typename Scalar>
DihedralAngles<Scalar> hyp_angles(const AntiprismSpec<Scalar>& spec) {
  const auto [cos_a, cos_c] = hyp_angle_cosines(spec);
  return {clamped_acos(cos_a), clamped_acos(cos_c)};
}

/// Same cosines written in the embedding parameters, before substituting
/// r and h by edge lengths.
template <typename Scalar>
std::pair<Scalar, Scalar> hyp_angle_cosines_from_params(int n, const EmbeddingParams<Scalar>& p) {
  using std::cos;
  using std::sqrt;
  using std::tan;
  const Scalar phi = std::numbers::pi_v<Scalar> / Scalar(n);
  const Scalar t2 = tan(phi / Scalar(2)) * tan(phi / Scalar(2));
  const Scalar r2 = p.r * p.r;
  const Scalar h2 = p.h * p.h;
  const Scalar cos_a =
      p.r * (h2 - Scalar(4) * t2) /
      sqrt((h2 - Scalar(4)) * (h2 * (r2 - Scalar(1)) - Scalar(2) * h2 * t2 - (h2 + Scalar(4) * r2) * t2 * t2));
  const Scalar k = cos(phi);
  const Scalar k2 = Scalar(3) + cos(Scalar(2) * phi);
  const Scalar cos_c =
      (Scalar(4) * (h2 * (r2 - Scalar(2)) - Scalar(4) * r2) * k + r2 * (Scalar(4) + h2) * k2) /
      (Scalar(8) * h2 - r2 * (Scalar(4) * (Scalar(4) + h2) * k + (h2 - Scalar(4)) * k2));
  return {cos_a, cos_c};
}

/// Dihedral angles measured on the vertex coordinates: face poles from
/// plane_through, oriented outward against the vertex centroid, and the
/// angle from dihedral_angle. Independent of the closed forms.
///
/// For n >= 3, A is taken between the lateral face V1V2V3 and the top face
/// V1V3V5. For n = 2 the top polygon is the single edge V1V3; the tetrahedron
/// angle theta between V1V2V3 and V1V3V4 is measured and A = (pi + theta)/2,
/// the angle against the plane x3 = h/2 that bisects the exterior wedge.
template <typename Scalar>
DihedralAngles<Scalar> hyp_angles_oracle(const AntiprismSpec<Scalar>& spec) {
  const std::vector<MinkowskiVec<Scalar>> v = hyp_vertices(spec);
  MinkowskiVec<Scalar> interior = MinkowskiVec<Scalar>::Zero();
  for (const auto& p : v) interior += p;
  interior /= Scalar(v.size());

  auto face = [&](int i, int j, int k) { return oriented_outward(plane_through(v[i], v[j], v[k]), interior); };
  const Plane<Scalar> up = face(0, 1, 2);
  const Plane<Scalar> down = face(1, 2, 3);

  DihedralAngles<Scalar> out;
  out.C = dihedral_angle(up, down);
  if (spec.n >= 3) {
    out.A = dihedral_angle(face(0, 2, 4), up);
  } else {
    const Scalar theta = dihedral_angle(up, face(0, 2, 3));
    out.A = (std::numbers::pi_v<Scalar> + theta) / Scalar(2);
  }
  return out;
}

template <typename Scalar>
struct AngleDerivatives {
  Scalar dA_dc = Scalar(0);
  Scalar dC_dc = Scalar(0);
};

/// Partial derivatives of the angles in the lateral length c:
///   dA/dc = 2(cosh c - cos(pi/n)) sinh a sinh c / ((1 + cosh a - 2cosh^2 c) sqrt(R))
///   dC/dc = -(cosh a - 1)(1 + cosh a + 2cosh^2 c - 4cosh c cos(pi/n))
///           / ((1 + cosh a - 2cosh^2 c) sqrt(R))
/// Both diverge like (c - c0)^(-1/2) at the flattening boundary.
template <typename Scalar>
AngleDerivatives<Scalar> hyp_angle_derivs(const AntiprismSpec<Scalar>& spec) {
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  const ExistenceReport<Scalar> ex = hyp_exists(spec);
  if (!ex.exists) {
    throw Error(ErrorCode::NotRealizable, "no compact hyperbolic antiprism with these edge lengths");
  }
  const Scalar R = detail::radicand(spec.n, spec.a, ex.c0, spec.c, spec.c - ex.c0);
  if (!(R > Scalar(0))) {
    throw Error(ErrorCode::SingularR, "R must be positive inside the existence domain");
  }
  const Scalar k = detail::cos_pi_over<Scalar>(spec.n);
  const Scalar edge = detail::cosh_m1(spec.a);
  const Scalar ch = cosh(spec.c);
  const Scalar sh = sinh(spec.c);
  const Scalar den = (edge - Scalar(2) * sh * sh) * sqrt(R);
  return {Scalar(2) * (ch - k) * sinh(spec.a) * sh / den,
          -edge * (Scalar(2) + edge + Scalar(2) * ch * ch - Scalar(4) * ch * k) / den};
}

}  // namespace antiprism
