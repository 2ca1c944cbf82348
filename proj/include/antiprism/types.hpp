#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "antiprism/error.hpp"

namespace antiprism {

/// Antiprism A_n(a, c): two regular n-gons with edge a joined by 2n
/// triangles with lateral edge c.
template <typename Scalar>
struct AntiprismSpec {
  int n = 3;
  Scalar a = Scalar(1);
  Scalar c = Scalar(1);
};

/// r: circumradius of the top polygon; h: distance between top and bottom planes.
template <typename Scalar>
struct EmbeddingParams {
  Scalar r = Scalar(0);
  Scalar h = Scalar(0);
};

/// A: angle along the polygon (a) edges, C: angle along the lateral (c)
/// edges. Radians.
template <typename Scalar>
struct DihedralAngles {
  Scalar A = Scalar(0);
  Scalar C = Scalar(0);

  /// 2A + 2C - 2pi; positive for every compact hyperbolic antiprism.
  Scalar excess() const { return Scalar(2) * A + Scalar(2) * C - Scalar(2) * std::numbers::pi_v<Scalar>; }
};

/// Result of an existence test. `margin` is the defining inequality's left
/// hand side (its sign convention differs between the Euclidean and the
/// hyperbolic test); `c0` is the lateral length at which the solid
/// flattens into a planar 2n-gon.
template <typename Scalar>
struct ExistenceReport {
  bool exists = false;
  bool on_boundary = false;
  Scalar margin = Scalar(0);
  Scalar c0 = Scalar(0);
};

/// How to treat a spec sitting exactly on the flattening boundary.
enum class Boundary { Reject, Allow };

template <typename Scalar>
void validate(const AntiprismSpec<Scalar>& spec) {
  using std::isfinite;
  if (spec.n < 2) {
    throw Error(ErrorCode::InvalidArgument, "n must be at least 2, got " + std::to_string(spec.n));
  }
  if (!(spec.a > Scalar(0)) || !isfinite(spec.a)) {
    throw Error(ErrorCode::InvalidArgument, "edge length a must be positive and finite");
  }
  if (!(spec.c > Scalar(0)) || !isfinite(spec.c)) {
    throw Error(ErrorCode::InvalidArgument, "edge length c must be positive and finite");
  }
}

}  // namespace antiprism
