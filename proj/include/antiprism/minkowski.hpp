#pragma once

// Primitives of the projective Cayley-Klein model of hyperbolic 3-space:
// points live in the hyperplane x4 = 1 of Minkowski space R^{3,1}, inside
// the unit ball K, and planes are represented by their poles.

#include <cmath>
#include <limits>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "antiprism/error.hpp"

namespace antiprism {

template <typename Scalar>
using MinkowskiVec = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

/// Largest excursion outside [-1, 1] (for arccos) or below 1 (for arccosh)
/// that is treated as rounding and clamped rather than reported.
template <typename Scalar>
constexpr Scalar clamp_slack() {
  return Scalar(8) * std::numeric_limits<Scalar>::epsilon();
}

/// Signature (-,-,-,+) bilinear form.
template <typename DerivedU, typename DerivedV>
typename DerivedU::Scalar mink(const Eigen::MatrixBase<DerivedU>& u,
                               const Eigen::MatrixBase<DerivedV>& v) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedU, 4);
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedV, 4);
  return u(3) * v(3) - u.template head<3>().dot(v.template head<3>());
}

/// Model point (x1, x2, x3, 1).
template <typename Scalar>
MinkowskiVec<Scalar> model_point(Scalar x1, Scalar x2, Scalar x3) {
  return MinkowskiVec<Scalar>(x1, x2, x3, Scalar(1));
}

template <typename Scalar>
MinkowskiVec<Scalar> model_point(const Vec3<Scalar>& x) {
  return MinkowskiVec<Scalar>(x(0), x(1), x(2), Scalar(1));
}

template <typename Scalar>
Scalar clamped_acos(Scalar x) {
  using std::abs;
  using std::acos;
  if (!(abs(x) <= Scalar(1) + clamp_slack<Scalar>())) {
    throw Error(ErrorCode::NumericalBreakdown, "arccos argument outside [-1, 1]");
  }
  if (x > Scalar(1)) x = Scalar(1);
  if (x < Scalar(-1)) x = Scalar(-1);
  return acos(x);
}

template <typename Scalar>
Scalar clamped_acosh(Scalar x) {
  using std::acosh;
  if (!(x >= Scalar(1) - clamp_slack<Scalar>())) {
    throw Error(ErrorCode::NumericalBreakdown, "arccosh argument below 1");
  }
  return acosh(x < Scalar(1) ? Scalar(1) : x);
}

/// Hyperbolic distance between two points of K.
///
/// The defining quotient cosh(rho) = <V,W> / sqrt(<V,V><W,W>) is checked
/// against the clamping policy, but the value is taken from
/// sinh^2(rho) = (|v-w|^2 - |v x w|^2) / ((1-|v|^2)(1-|w|^2)), which equals
/// (<V,W>^2 - <V,V><W,W>) / (<V,V><W,W>) for x4 = 1 and keeps short
/// distances accurate.
template <typename Scalar>
Scalar hyp_distance(const MinkowskiVec<Scalar>& v, const MinkowskiVec<Scalar>& w) {
  using std::asinh;
  using std::sqrt;
  const Scalar vv = mink(v, v);
  const Scalar ww = mink(w, w);
  if (!(vv > Scalar(0)) || !(ww > Scalar(0))) {
    throw Error(ErrorCode::PointOutsideModel, "hyp_distance needs points inside the model ball");
  }
  const Scalar cosh_rho = mink(v, w) / sqrt(vv * ww);
  if (!(cosh_rho >= Scalar(1) - clamp_slack<Scalar>())) {
    throw Error(ErrorCode::NumericalBreakdown, "cosh of distance below 1");
  }

  const Vec3<Scalar> p = v.template head<3>() / v(3);
  const Vec3<Scalar> q = w.template head<3>() / w(3);
  const Scalar num = (p - q).squaredNorm() - p.cross(q).squaredNorm();
  const Scalar den = (Scalar(1) - p.squaredNorm()) * (Scalar(1) - q.squaredNorm());
  return asinh(sqrt((num > Scalar(0) ? num : Scalar(0)) / den));
}

/// A hyperbolic plane, given by its pole N: the plane is {V in K : <V,N> = 0}.
/// Poles built from points are normalized to x4 = 1.
template <typename Scalar>
struct Plane {
  MinkowskiVec<Scalar> pole;
};

/// Smallest reciprocal condition number accepted by plane_through.
inline constexpr double kMinPlaneRcond = 1e-12;

/// Plane through three points of K. Solves <v_i, n>_E = 1 for the Euclidean
/// part n of the pole (n, 1).
template <typename Scalar>
Plane<Scalar> plane_through(const MinkowskiVec<Scalar>& v1, const MinkowskiVec<Scalar>& v2,
                            const MinkowskiVec<Scalar>& v3) {
  using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
  using std::abs;

  Mat3 m;
  int row = 0;
  for (const MinkowskiVec<Scalar>* v : {&v1, &v2, &v3}) {
    if (!(mink(*v, *v) > Scalar(0))) {
      throw Error(ErrorCode::PointOutsideModel, "plane_through needs points inside the model ball");
    }
    m.row(row++) = (v->template head<3>() / (*v)(3)).transpose();
  }

  const Eigen::PartialPivLU<Mat3> lu(m);
  if (!(lu.rcond() >= Scalar(kMinPlaneRcond))) {
    throw Error(ErrorCode::DegenerateTriple,
                "points are collinear or their plane passes through the model origin");
  }
  const Vec3<Scalar> ones = Vec3<Scalar>::Ones();
  const Vec3<Scalar> n = lu.solve(ones);

  const Scalar scale = m.cwiseAbs().rowwise().sum().maxCoeff() * n.cwiseAbs().maxCoeff() + Scalar(1);
  if (!((m * n - ones).cwiseAbs().maxCoeff() <= Scalar(1e-12) * scale)) {
    throw Error(ErrorCode::NumericalBreakdown, "plane solve residual too large");
  }
  return Plane<Scalar>{MinkowskiVec<Scalar>(n(0), n(1), n(2), Scalar(1))};
}

/// Orients the pole outward of the region containing `interior`, i.e. so that
/// <N, interior> > 0. With this convention the Euclidean part of a normalized
/// pole points away from the region.
template <typename Scalar>
Plane<Scalar> oriented_outward(const Plane<Scalar>& plane, const MinkowskiVec<Scalar>& interior) {
  const Scalar side = mink(plane.pole, interior);
  if (side == Scalar(0)) {
    throw Error(ErrorCode::InvalidArgument, "reference point lies on the plane");
  }
  return side > Scalar(0) ? plane : Plane<Scalar>{-plane.pole};
}

/// Interior dihedral angle between two planes whose poles are both oriented
/// outward of the angle: cos(theta) = <N,M> / sqrt(<N,N><M,M>).
///
/// Both self-products are negative for genuine planes, so the sign in front
/// of <N,M> is + in this signature. The result is unchanged if both poles
/// are flipped together.
template <typename Scalar>
Scalar dihedral_angle(const Plane<Scalar>& p, const Plane<Scalar>& q) {
  using std::sqrt;
  const Scalar nn = mink(p.pole, p.pole);
  const Scalar mm = mink(q.pole, q.pole);
  if (!(nn < Scalar(0)) || !(mm < Scalar(0))) {
    throw Error(ErrorCode::NotAPlane, "pole does not define a plane meeting the model ball");
  }
  return clamped_acos(mink(p.pole, q.pole) / sqrt(nn * mm));
}

}  // namespace antiprism
