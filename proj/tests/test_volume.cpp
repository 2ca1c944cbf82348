#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstring>
#include <numbers>

#include "antiprism/antiprism.hpp"
#include "oracles.hpp"

using namespace antiprism;
using Spec = AntiprismSpec<double>;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInvariantViolation;
}

double literal_integrand(int n, double a, double t) {
  const double ca = std::cosh(a), ct = std::cosh(t), k = std::cos(std::numbers::pi / n);
  const double G = 2 * (ct - k) * std::sinh(a) * std::sinh(t);
  const double H = -(ca - 1) * (1 + ca + 2 * ct * ct - 4 * ct * k);
  return (a * G + t * H) / ((2 * ct * ct - 1 - ca) * std::sqrt(oracle::radicand_literal(n, a, t)));
}

}  // namespace

TEST_CASE("integrand: stable evaluation matches the literal formula") {
  for (int i = 0; i < 1000; ++i) {
    const int n = oracle::uniform_int(2, 12);
    const double a = oracle::uniform(0.05, 4.0);
    const double t = hyp_c0(n, a) + oracle::uniform(0.01, 3.0);
    CHECK(volume_integrand(n, a, t) == doctest::Approx(literal_integrand(n, a, t)).epsilon(1e-9));
  }
}

TEST_CASE("integrand: octahedron form") {
  for (int i = 0; i < 100; ++i) {
    const double a = oracle::uniform(0.05, 4.0);
    const double t = hyp_c0(3, a) + oracle::uniform(0.01, 3.0);
    CHECK(volume_integrand(3, a, t) == doctest::Approx(oracle::octahedron_integrand_literal(a, t)).epsilon(1e-9));
  }
}

TEST_CASE("integrand: domain") {
  const VolumeIntegrand<double> f(4, 1.0);
  CHECK(code_of([&] { f(f.c0()); }) == ErrorCode::OutOfDomain);
  CHECK(code_of([&] { f(f.c0() - 0.1); }) == ErrorCode::OutOfDomain);
  CHECK(f.denominator(f.c0() + 1e-3) > 0);
  CHECK(f.R(f.c0() + 1e-3) > 0);
}

TEST_CASE("integrand: inverse square root at c0, smooth after substitution") {
  for (int n : {2, 3, 6}) {
    for (double a : {0.3, 1.0, 3.0}) {
      const VolumeIntegrand<double> f(n, a);
      // f(c0 + e) sqrt(e) tends to a finite limit
      const double e1 = 1e-8, e2 = 1e-10;
      const double l1 = f(f.c0() + e1) * std::sqrt(e1), l2 = f(f.c0() + e2) * std::sqrt(e2);
      CHECK(l1 == doctest::Approx(l2).epsilon(1e-3));
      // substituted form is continuous at s = 0 and equals 2 * that limit
      CHECK(f.substituted(0.0) == doctest::Approx(2 * l2).epsilon(1e-4));
      CHECK(f.substituted(1e-6) == doctest::Approx(f.substituted(0.0)).epsilon(1e-9));
      CHECK(f.substituted(0.3) == doctest::Approx(2 * 0.3 * f(f.c0() + 0.09)).epsilon(1e-12));
    }
  }
}

TEST_CASE("volume: regular octahedron A_3(1, 1)") {
  const auto v = hyp_volume(Spec{3, 1.0, 1.0});
  CHECK(v.value == doctest::Approx(0.3521774500948498).epsilon(1e-12));
  CHECK(v.value == doctest::Approx(oracle::octahedron_volume_midpoint(1.0, 1.0)).epsilon(1e-9));
  CHECK(v.abs_error_estimate <= 1e-10 * v.value);
}

TEST_CASE("volume: octahedra against the midpoint oracle") {
  for (double a : {0.2, 0.7, 1.5, 2.5}) {
    for (double dc : {0.05, 0.5, 1.5}) {
      const double c = hyp_c0(3, a) + dc;
      CHECK(hyp_volume(Spec{3, a, c}).value == doctest::Approx(oracle::octahedron_volume_midpoint(a, c)).epsilon(1e-9));
    }
  }
}

TEST_CASE("volume: against tanh-sinh in the original variable") {
  for (int i = 0; i < 40; ++i) {
    const int n = oracle::uniform_int(2, 10);
    const double a = oracle::uniform(0.1, 3.0);
    const double c0 = hyp_c0(n, a);
    const double c = c0 + oracle::uniform(0.01, 2.0);
    const VolumeIntegrand<double> f(n, a);
    // pass t - c0 separately so the radicand keeps its digits near c0
    auto g = [&](double t, double t_minus_c0) {
      return (a * f.G(t) + t * f.H(t)) / (f.denominator(t) * std::sqrt(detail::radicand(n, a, c0, t, t_minus_c0)));
    };
    const double reference = n * oracle::tanh_sinh(g, c0, c, 1e-12);
    CHECK(hyp_volume(Spec{n, a, c}).value == doctest::Approx(reference).epsilon(1e-8));
  }
}

TEST_CASE("volume: vanishes at the flattening boundary") {
  for (int n : {2, 3, 5, 8}) {
    const double a = 1.1;
    const double c0 = hyp_c0(n, a);
    CHECK(hyp_volume(Spec{n, a, c0}, 1e-10, kDefaultMaxEvaluations, Boundary::Allow).value == 0.0);
    CHECK(code_of([&] { hyp_volume(Spec{n, a, c0}); }) == ErrorCode::NotRealizable);
    double previous = hyp_volume(Spec{n, a, c0 + 1e-1}).value;
    for (double eps : {1e-3, 1e-5, 1e-7}) {
      const double v = hyp_volume(Spec{n, a, c0 + eps}).value;
      CHECK(v > 0);
      CHECK(v < previous);
      previous = v;
    }
    CHECK(previous < 1e-2);
    // the integrand is ~ (t - c0)^(-1/2), so V ~ (c - c0)^(1/2)
    const double slope = std::log(hyp_volume(Spec{n, a, c0 + 1e-6}).value / hyp_volume(Spec{n, a, c0 + 1e-8}).value) /
                         std::log(100.0);
    CHECK(slope == doctest::Approx(0.5).epsilon(1e-3));
  }
}

TEST_CASE("volume: c-monotonicity follows the integrand sign") {
  // aG + tH changes sign: for large t it behaves like
  // 2cosh^2 t (a sinh a - t(cosh a - 1)), negative once t > a coth(a/2).
  // The volume grows while the integrand is positive, shrinks after, and
  // stays positive throughout.
  int sign_changes = 0;
  for (int n : {2, 4, 7}) {
    for (double a : {0.4, 0.9, 2.0}) {
      const VolumeIntegrand<double> f(n, a);
      const double c0 = f.c0();
      double previous = 0;
      double previous_c = c0;
      for (double dc = 0.05; dc < 5; dc += 0.25) {
        const double c = c0 + dc;
        const double v = hyp_volume(Spec{n, a, c}).value;
        CHECK(v > 0);
        const double lo = f.numerator(previous_c + 1e-12), hi = f.numerator(c);
        if (lo > 0 && hi > 0) CHECK(v > previous);
        if (lo < 0 && hi < 0) CHECK(v < previous);
        if ((lo > 0) != (hi > 0)) ++sign_changes;
        previous = v;
        previous_c = c;
      }
    }
  }
  CHECK(sign_changes > 0);
  CHECK(VolumeIntegrand<double>(4, 0.9).numerator(6.0) < 0);
}

TEST_CASE("volume: stable numerator") {
  for (int i = 0; i < 500; ++i) {
    const int n = oracle::uniform_int(2, 12);
    const double a = oracle::uniform(0.3, 4.0);
    const VolumeIntegrand<double> f(n, a);
    const double t = f.c0() + oracle::uniform(0.01, 3.0);
    CHECK(f.numerator(t) == doctest::Approx(a * f.G(t) + t * f.H(t)).epsilon(1e-11).scale(a * std::abs(f.G(t))));
  }
  // small scale: the leading terms of aG and tH cancel; the regrouped form
  // keeps full precision (reference from 50-digit arithmetic)
  CHECK(VolumeIntegrand<double>(5, 0.01).numerator(0.015) == doctest::Approx(2.6180728469060035e-10).epsilon(1e-13));
}

TEST_CASE("volume: small polygon edge") {
  for (int n : {3, 6}) {
    const double v = hyp_volume(Spec{n, 1e-4, 1.0}).value;
    CHECK(v > 0);
    CHECK(v < 1e-6);
  }
}

TEST_CASE("volume: Euclidean limit") {
  // V(eps a, eps c) / V_E(eps a, eps c) - 1 = O(eps^2)
  for (int n : {2, 3, 5, 9}) {
    const double a = 1.0, c = 1.0;
    double previous = 1;
    for (double eps : {0.1, 0.03, 0.01, 1e-3}) {
      const Spec small{n, eps * a, eps * c};
      const double ratio = hyp_volume(small, 1e-12).value / euc_volume(small);
      const double gap = std::abs(ratio - 1);
      CHECK(gap < 2 * eps * eps);
      CHECK(gap < previous);
      previous = gap;
    }
  }
  const double r5 = hyp_volume(Spec{5, 0.1, 0.1}, 1e-12).value / (1e-3 * euc_volume(Spec{5, 1.0, 1.0}));
  CHECK(r5 - 1 == doctest::Approx(-5.16e-3).epsilon(1e-2));
}

TEST_CASE("volume: Schlafli relation") {
  const auto report = schlafli_check(Spec{4, 0.8, 1.2}, 1e-4);
  CHECK(report.dV_dc_integrand == doctest::Approx(0.362304740203).epsilon(1e-10));
  CHECK(report.c_discrepancy() < 1e-6);
  CHECK(report.dV_da_difference == doctest::Approx(1.17571064111).epsilon(1e-7));
  CHECK(report.a_discrepancy() < 1e-6);

  for (int i = 0; i < 20; ++i) {
    const int n = oracle::uniform_int(2, 9);
    const double a = oracle::uniform(0.3, 2.5);
    const Spec spec{n, a, hyp_c0(n, a) + oracle::uniform(0.1, 2.0)};
    const auto r = schlafli_check(spec, 1e-4);
    CHECK(r.c_discrepancy() < 1e-6 * (1 + std::abs(r.dV_dc_integrand)));
    CHECK(r.a_discrepancy() < 1e-5 * (1 + std::abs(r.dV_da_schlafli)));
  }
  CHECK(code_of([] { schlafli_check(Spec{3, 1.0, hyp_c0(3, 1.0) + 1e-5}, 1e-4); }) == ErrorCode::OutOfDomain);
}

TEST_CASE("volume: tolerance and budget validation") {
  const Spec spec{3, 1.0, 1.0};
  CHECK(code_of([&] { hyp_volume(spec, 1e-14); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { hyp_volume(spec, 1e-2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { hyp_volume(spec, 1e-10, 10); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { hyp_volume(Spec{8, 3.0, 10.0}, 1e-13, 15); }) == ErrorCode::ConvergenceFailure);
}

TEST_CASE("volume: tightening the tolerance") {
  for (const Spec& spec : {Spec{3, 1.0, 1.0}, Spec{5, 0.3, 0.7}, Spec{8, 2.0, 3.0}, Spec{2, 1.0, 1.3}}) {
    double previous_value = hyp_volume(spec, 1e-6).value;
    double previous_error = hyp_volume(spec, 1e-6).abs_error_estimate;
    for (double tol : {1e-8, 1e-10, 1e-12}) {
      const auto r = hyp_volume(spec, tol);
      CHECK(r.abs_error_estimate <= tol * r.value);
      CHECK(std::abs(r.value - previous_value) <= previous_error + 1e-15);
      previous_value = r.value;
      previous_error = r.abs_error_estimate;
    }
  }
}

TEST_CASE("volume: reproducible and fast") {
  const Spec spec{7, 1.7, 2.9};
  const auto first = hyp_volume(spec);
  const auto again = hyp_volume(spec);
  CHECK(std::memcmp(&first.value, &again.value, sizeof(double)) == 0);
  CHECK(first.evaluations == again.evaluations);

  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 20; ++i) (void)hyp_volume(Spec{8, 4.0, 8.0}, 1e-12);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / 20;
  CHECK(ms < 50);
}

TEST_CASE("long double volume agrees with double") {
  const auto wide = hyp_volume(AntiprismSpec<long double>{3, 1.0L, 1.0L}, 1e-12L);
  CHECK(double(wide.value) == doctest::Approx(0.3521774500948498).epsilon(1e-13));
}
