#pragma once

// Volume of the compact hyperbolic antiprism as an integral over the
// lateral length t from the flattening threshold c0 to c:
//
//   V = n * int_{c0}^{c} (a G + t H) / ((2cosh^2 t - 1 - cosh a) sqrt(R)) dt
//   G = 2 (cosh t - cos(pi/n)) sinh a sinh t
//   H = -(cosh a - 1)(1 + cosh a + 2cosh^2 t - 4cosh t cos(pi/n))
//   R = 1 - cosh a (2 + cosh a) + 2cosh^2 t + 4(cosh a - 1) cosh t cos(pi/n)
//       - 2 sinh^2 t cos(2pi/n)
//
// R vanishes linearly at t = c0, so the integrand has an inverse square root
// singularity there. Substituting t = c0 + s^2 removes it: the integrand in s
// is analytic on [0, sqrt(c - c0)] and goes to the adaptive Gauss-Kronrod
// driver.

#include <cmath>
#include <numbers>

#include "antiprism/error.hpp"
#include "antiprism/hyperbolic.hpp"
#include "antiprism/quadrature.hpp"
#include "antiprism/types.hpp"

namespace antiprism {

namespace detail {

/// sinh(x)/x - 1, by its Taylor series near 0.
template <typename Scalar>
Scalar sinhc_m1(Scalar x) {
  using std::abs;
  using std::sinh;
  if (abs(x) >= Scalar(0.5)) return sinh(x) / x - Scalar(1);
  const Scalar x2 = x * x;
  Scalar term(1), sum(0);
  for (int j = 1; j <= 10; ++j) {
    term *= x2 / Scalar((2 * j) * (2 * j + 1));
    sum += term;
  }
  return sum;
}

}  // namespace detail

inline constexpr double kMinRelTol = 1e-13;
inline constexpr double kMaxRelTol = 1e-3;
inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr long kDefaultMaxEvaluations = 1'000'000;

/// Integrand of the volume formula at fixed (n, a). `t` is the running
/// lateral length, as in the formula.
template <typename Scalar>
class VolumeIntegrand {
 public:
  VolumeIntegrand(int n, Scalar a) : n_(n), a_(a) {
    using std::cos;
    using std::sinh;
    const ExistenceReport<Scalar> ex = hyp_exists(AntiprismSpec<Scalar>{n, a, a});
    c0_ = ex.c0;
    k_ = cos(std::numbers::pi_v<Scalar> / Scalar(n));
    edge_ = detail::cosh_m1(a);
    sinh_a_ = sinh(a);
  }

  int n() const { return n_; }
  Scalar a() const { return a_; }
  Scalar c0() const { return c0_; }

  Scalar G(Scalar t) const {
    using std::cosh;
    using std::sinh;
    return Scalar(2) * (cosh(t) - k_) * sinh_a_ * sinh(t);
  }

  Scalar H(Scalar t) const {
    using std::cosh;
    const Scalar x = cosh(t);
    return -edge_ * (Scalar(2) + edge_ + Scalar(2) * x * x - Scalar(4) * x * k_);
  }

  Scalar R(Scalar t) const { return detail::radicand(n_, a_, c0_, t, t - c0_); }

  /// a G(t) + t H(t). At small a and t the two products agree to leading
  /// order and their difference is O(a^2 t^3) against O(a^2 t) terms, so the
  /// sum is regrouped with u = cosh t - 1, E = cosh a - 1 and
  /// a sinh a sinh t - 2tE = 2a t sinh(a/2) [cosh(a/2) - 1 + cosh(a/2) sc(t) - sc(a/2)],
  /// sc(x) = sinh(x)/x - 1:
  ///   aG + tH = 2(1-k)(a sinh a sinh t - 2tE) + 2a u sinh a sinh t - tE(E + 2u(2(1-k) + u))
  Scalar numerator(Scalar t) const {
    using std::cosh;
    using std::sinh;
    const Scalar half = a_ / Scalar(2);
    const Scalar ch = cosh(half);
    const Scalar u = detail::cosh_m1(t);
    const Scalar gap = Scalar(2) * a_ * t * sinh(half) *
                       (detail::cosh_m1(half) + ch * detail::sinhc_m1(t) - detail::sinhc_m1(half));
    return Scalar(2) * (Scalar(1) - k_) * gap + Scalar(2) * a_ * u * sinh_a_ * sinh(t) -
           t * edge_ * (edge_ + Scalar(2) * u * (Scalar(2) * (Scalar(1) - k_) + u));
  }

  /// 2cosh^2 t - 1 - cosh a, positive for t > c0.
  Scalar denominator(Scalar t) const {
    using std::sinh;
    const Scalar s = sinh(t);
    return Scalar(2) * s * s - edge_;
  }

  Scalar operator()(Scalar t) const {
    using std::sqrt;
    if (!(t > c0_)) {
      throw Error(ErrorCode::OutOfDomain, "volume integrand needs t > c0");
    }
    const Scalar r = R(t);
    if (!(r > Scalar(0))) {
      throw Error(ErrorCode::SingularR, "R(t) must be positive for t > c0");
    }
    return numerator(t) / (denominator(t) * sqrt(r));
  }

  /// 2 s f(c0 + s^2), continuous at s = 0. The factor s^2 = t - c0 is kept
  /// exact, and 2s / sqrt(sinh(s^2/2)) is evaluated as a ratio.
  Scalar substituted(Scalar s) const {
    using std::sinh;
    using std::sqrt;
    const Scalar s2 = s * s;
    const Scalar t = c0_ + s2;
    // sinh(s^2/2) / s^2 -> 1/2
    const Scalar ratio = s2 > Scalar(0) ? sinh(s2 / Scalar(2)) / s2 : Scalar(0.5);
    const Scalar near = Scalar(4) * (Scalar(1) + k_) * sinh((t + c0_) / Scalar(2)) * ratio;
    const Scalar far = Scalar(2) * (Scalar(1) - k_) * detail::cosh_m1(t) + edge_ + Scalar(4) * (Scalar(1) - k_);
    return Scalar(2) * numerator(t) / (denominator(t) * sqrt(near * far));
  }

 private:
  int n_;
  Scalar a_;
  Scalar c0_;
  Scalar k_;
  Scalar edge_;
  Scalar sinh_a_;
};

template <typename Scalar>
Scalar volume_integrand(int n, Scalar a, Scalar t) {
  return VolumeIntegrand<Scalar>(n, a)(t);
}

/// Volume by adaptive quadrature on the substituted variable
/// s in [0, sqrt(c - c0)]. The error estimate is scaled by n with the value.
template <typename Scalar>
QuadratureResult<Scalar> hyp_volume(const AntiprismSpec<Scalar>& spec, Scalar rel_tol = Scalar(kDefaultRelTol),
                                    long max_evaluations = kDefaultMaxEvaluations,
                                    Boundary boundary = Boundary::Reject) {
  using std::sqrt;
  if (!(rel_tol >= Scalar(kMinRelTol) && rel_tol <= Scalar(kMaxRelTol))) {
    throw Error(ErrorCode::InvalidArgument, "rel_tol must lie in [1e-13, 1e-3]");
  }
  if (max_evaluations < 15) {
    throw Error(ErrorCode::InvalidArgument, "evaluation budget too small");
  }
  const ExistenceReport<Scalar> ex = hyp_exists(spec);
  if (!ex.exists) {
    if (boundary == Boundary::Allow && ex.on_boundary) {
      return QuadratureResult<Scalar>{Scalar(0), Scalar(0), 0, true};
    }
    throw Error(ErrorCode::NotRealizable, "no compact hyperbolic antiprism with these edge lengths");
  }

  const VolumeIntegrand<Scalar> integrand(spec.n, spec.a);
  QuadratureOptions<Scalar> opts;
  opts.rel_tol = rel_tol;
  opts.max_evaluations = max_evaluations;
  QuadratureResult<Scalar> result = integrate_adaptive(
      [&integrand](Scalar s) { return integrand.substituted(s); }, Scalar(0), sqrt(spec.c - ex.c0), opts);
  if (!result.converged) {
    throw Error(ErrorCode::ConvergenceFailure, "volume quadrature exhausted its evaluation budget");
  }
  const Scalar n = Scalar(spec.n);
  result.value *= n;
  result.abs_error_estimate *= n;
  return result;
}

/// Differential checks of the volume against the Schlafli relation
/// dV = -n a dA - n c dC.
template <typename Scalar>
struct SchlafliReport {
  Scalar dV_dc_difference = Scalar(0);  // (V(c+d) - V(c-d)) / 2d
  Scalar dV_dc_integrand = Scalar(0);   // n * integrand at t = c
  Scalar dV_da_difference = Scalar(0);  // (V(a+d) - V(a-d)) / 2d
  Scalar dV_da_schlafli = Scalar(0);    // -n (a dA/da + c dC/da), angle partials by differences

  Scalar c_discrepancy() const {
    using std::abs;
    return abs(dV_dc_difference - dV_dc_integrand);
  }
  Scalar a_discrepancy() const {
    using std::abs;
    return abs(dV_da_difference - dV_da_schlafli);
  }
};

/// The a-direction check is the non-trivial one: the volume is integrated
/// along c only, so agreement in a tests that the form is exact.
template <typename Scalar>
SchlafliReport<Scalar> schlafli_check(const AntiprismSpec<Scalar>& spec, Scalar delta,
                                      Scalar rel_tol = Scalar(1e-12)) {
  if (!(delta > Scalar(0))) {
    throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  }
  using Spec = AntiprismSpec<Scalar>;
  const Spec c_plus{spec.n, spec.a, spec.c + delta};
  const Spec c_minus{spec.n, spec.a, spec.c - delta};
  const Spec a_plus{spec.n, spec.a + delta, spec.c};
  const Spec a_minus{spec.n, spec.a - delta, spec.c};
  for (const Spec& s : {spec, c_plus, c_minus, a_plus, a_minus}) {
    if (!(s.a > Scalar(0)) || !(s.c > Scalar(0)) || !hyp_exists(s).exists) {
      throw Error(ErrorCode::OutOfDomain, "Schlafli perturbation leaves the existence domain");
    }
  }

  auto volume = [rel_tol](const Spec& s) { return hyp_volume(s, rel_tol).value; };
  const Scalar n = Scalar(spec.n);
  const Scalar two_delta = Scalar(2) * delta;

  SchlafliReport<Scalar> report;
  report.dV_dc_difference = (volume(c_plus) - volume(c_minus)) / two_delta;
  report.dV_dc_integrand = n * volume_integrand(spec.n, spec.a, spec.c);
  report.dV_da_difference = (volume(a_plus) - volume(a_minus)) / two_delta;

  const DihedralAngles<Scalar> up = hyp_angles(a_plus);
  const DihedralAngles<Scalar> down = hyp_angles(a_minus);
  const Scalar dA_da = (up.A - down.A) / two_delta;
  const Scalar dC_da = (up.C - down.C) / two_delta;
  report.dV_da_schlafli = -n * (spec.a * dA_da + spec.c * dC_da);
  return report;
}

}  // namespace antiprism
