#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "antiprism/antiprism.hpp"
#include "antiprism/cli.hpp"

namespace antiprism::cli {
namespace {

using Spec = AntiprismSpec<double>;
constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const Spec& spec, const std::string& what) {
    ++result_.total;
    if (ok) {
      ++result_.passed;
    } else if (result_.first_failure.empty()) {
      std::ostringstream os;
      os.precision(17);
      os << what << " at n=" << spec.n << " a=" << spec.a << " c=" << spec.c;
      result_.first_failure = os.str();
    }
  }

  /// Runs `check`; a thrown Error counts as a failure.
  template <typename F>
  void run(const Spec& spec, const std::string& what, F&& check) {
    bool ok = false;
    try {
      ok = check();
    } catch (const Error& e) {
      expect(false, spec, what + " threw " + e.what());
      return;
    }
    expect(ok, spec, what);
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

double relative(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

std::vector<double> edge_values(bool quick) {
  if (quick) return {0.2, 1.0, 2.5};
  return {0.1, 0.4, 0.8, 1.2, 1.7, 2.3, 3.0};
}

std::vector<double> lateral_offsets(bool quick) {
  if (quick) return {0.05, 0.6, 2.0};
  return {0.02, 0.1, 0.3, 0.7, 1.3, 2.0, 3.0};
}

/// Interior points of the hyperbolic existence domain.
std::vector<Spec> hyperbolic_grid(bool quick) {
  std::vector<Spec> grid;
  for (int n = 2; n <= 8; ++n) {
    for (double a : edge_values(quick)) {
      const double c0 = hyp_c0(n, a);
      for (double dc : lateral_offsets(quick)) grid.push_back({n, a, c0 + dc});
    }
  }
  return grid;
}

std::vector<Spec> euclidean_grid(bool quick) {
  std::vector<Spec> grid;
  for (int n = 2; n <= 8; ++n) {
    const double half = std::cos(kPi / (2 * n));
    for (double a : quick ? std::vector<double>{0.5, 2.0} : std::vector<double>{0.3, 0.7, 1.0, 1.9, 4.0}) {
      const double c0 = a / (2 * half);
      for (double f : quick ? std::vector<double>{1.1, 3.0} : std::vector<double>{1.01, 1.2, 1.7, 2.5, 6.0}) {
        grid.push_back({n, a, c0 * f});
      }
    }
  }
  return grid;
}

/// Euclidean dihedral angles from cross-product face normals.
DihedralAngles<double> euclidean_angles_from_coordinates(const Spec& spec) {
  const std::vector<Vec3<double>> v = euc_vertices(spec);
  auto outward = [&](int i, int j, int k) {
    Vec3<double> nrm = (v[j] - v[i]).cross(v[k] - v[i]).normalized();
    return nrm.dot(v[i]) < 0.0 ? Vec3<double>(-nrm) : nrm;
  };
  auto interior = [](const Vec3<double>& p, const Vec3<double>& q) { return kPi - std::acos(p.dot(q)); };
  const Vec3<double> up = outward(0, 1, 2);
  DihedralAngles<double> out;
  out.C = interior(up, outward(1, 2, 3));
  out.A = spec.n >= 3 ? interior(outward(0, 2, 4), up) : (kPi + interior(up, outward(0, 2, 3))) / 2.0;
  return out;
}

/// Octahedron form of the volume integrand. The radical keeps t - c0 exact
/// through 3cosh t - cosh a - 2 = 6 sinh((t+c0)/2) sinh((t-c0)/2), and the
/// numerator, which cancels badly for small a and t, is formed in long double.
double octahedron_integrand(double a_in, double dt) {
  using L = long double;
  const L a = a_in;
  const L c0 = std::acosh((std::cosh(a) + 2) / 3);
  const L t = c0 + dt;
  const L ca = std::cosh(a);
  const L ct = std::cosh(t);
  const L num = a * (2 * ct - 1) * std::sinh(a) * std::sinh(t) - t * (ca - 1) * (1 + ca + 2 * ct * (ct - 1));
  const L first = 6 * std::sinh((t + c0) / 2) * std::sinh(L(dt) / 2);
  return double(num / ((std::cosh(2 * t) - ca) * std::sqrt(first * (ca + ct))));
}

SuiteResult euclidean_volume_suite(bool quick) {
  Suite suite("euclidean-volume-oracle");
  for (const Spec& spec : euclidean_grid(quick)) {
    suite.run(spec, "closed form vs decomposition", [&] {
      return relative(euc_volume(spec), euc_volume_oracle(spec)) <= 1e-12;
    });
  }
  return suite.result();
}

SuiteResult euclidean_angle_suite(bool quick) {
  Suite suite("euclidean-angle-oracle");
  for (const Spec& spec : euclidean_grid(quick)) {
    suite.run(spec, "closed-form angles vs face normals", [&] {
      const auto closed = euc_angles(spec);
      const auto measured = euclidean_angles_from_coordinates(spec);
      return std::abs(closed.A - measured.A) <= 1e-10 && std::abs(closed.C - measured.C) <= 1e-10 &&
             closed.A > kPi / 2;
    });
  }
  return suite.result();
}

SuiteResult round_trip_suite(bool quick) {
  Suite suite("edge-length-round-trip");
  for (const Spec& spec : hyperbolic_grid(quick)) {
    suite.run(spec, "vertex distances reproduce a and c", [&] {
      const auto v = hyp_vertices(spec);
      return relative(hyp_distance(v[0], v[2]), spec.a) <= 1e-12 &&
             relative(hyp_distance(v[0], v[1]), spec.c) <= 1e-12;
    });
  }
  return suite.result();
}

SuiteResult angle_oracle_suite(const VerifyOptions& options) {
  Suite suite("angle-oracle");
  for (const Spec& spec : hyperbolic_grid(options.quick)) {
    suite.run(spec, "closed-form angles vs coordinate normals", [&] {
      const auto closed = options.closed_form_angles ? options.closed_form_angles(spec) : hyp_angles(spec);
      const auto oracle = hyp_angles_oracle(spec);
      return std::abs(closed.A - oracle.A) <= 1e-10 && std::abs(closed.C - oracle.C) <= 1e-10;
    });
  }
  return suite.result();
}

SuiteResult excess_suite(bool quick) {
  Suite suite("compactness-excess");
  for (const Spec& spec : hyperbolic_grid(quick)) {
    suite.run(spec, "2A + 2C > 2pi", [&] { return hyp_angles(spec).excess() > 0.0; });
  }
  for (int n : {3, 4, 7}) {
    const double c0 = hyp_c0(n, 1.0);
    const Spec base{n, 1.0, c0 + 1e-2};
    suite.run(base, "excess decreases toward the flattening boundary", [&] {
      double previous = hyp_angles(base).excess();
      for (int k = 3; k <= 5; ++k) {
        const double current = hyp_angles(Spec{n, 1.0, c0 + std::pow(10.0, -k)}).excess();
        if (!(current > 0.0 && current < previous)) return false;
        previous = current;
      }
      return true;
    });
  }
  return suite.result();
}

SuiteResult octahedron_suite(bool quick) {
  Suite suite("octahedron-integrand");
  for (double a : edge_values(quick)) {
    const double c0 = std::acosh((std::cosh(a) + 2) / 3);
    for (double dt : lateral_offsets(quick)) {
      const Spec spec{3, a, c0 + dt};
      suite.run(spec, "general integrand equals octahedron integrand", [&] {
        return relative(volume_integrand(3, a, spec.c), octahedron_integrand(a, dt)) <= 1e-12;
      });
    }
  }
  return suite.result();
}

SuiteResult schlafli_suite(bool quick) {
  Suite suite("schlafli");
  std::vector<Spec> points = {{4, 0.8, 1.2}, {3, 1.0, 1.0}, {2, 0.7, 1.1}, {6, 1.5, 2.0}};
  if (!quick) points.insert(points.end(), {{5, 0.5, 0.9}, {8, 2.0, 2.6}, {3, 2.5, 2.4}});
  for (const Spec& spec : points) {
    suite.run(spec, "dV/dc and dV/da agree with the Schlafli relation", [&] {
      const auto report = schlafli_check(spec, 1e-4);
      return report.c_discrepancy() <= 1e-6 && report.a_discrepancy() <= 1e-5;
    });
  }
  return suite.result();
}

SuiteResult quadrature_suite(bool quick) {
  Suite suite("quadrature-honesty");
  std::vector<Spec> points = {{3, 1.0, 1.0}, {5, 0.3, 0.7}, {8, 2.0, 3.0}};
  if (!quick) points.insert(points.end(), {{2, 1.0, 1.3}, {4, 0.05, 0.2}, {6, 3.0, 2.6}});
  for (const Spec& spec : points) {
    suite.run(spec, "tightening the tolerance stays inside the looser error estimate", [&] {
      const auto loose = hyp_volume(spec, 1e-8);
      const auto mid = hyp_volume(spec, 1e-10);
      const auto tight = hyp_volume(spec, 1e-12);
      return std::abs(loose.value - mid.value) < loose.abs_error_estimate &&
             std::abs(mid.value - tight.value) < mid.abs_error_estimate;
    });
  }
  return suite.result();
}

}  // namespace

std::vector<SuiteResult> verify(const VerifyOptions& options) {
  return {
      euclidean_volume_suite(options.quick), euclidean_angle_suite(options.quick),
      round_trip_suite(options.quick),       angle_oracle_suite(options),
      excess_suite(options.quick),           octahedron_suite(options.quick),
      schlafli_suite(options.quick),         quadrature_suite(options.quick),
  };
}

int run_verify(const VerifyOptions& options, std::ostream& out) {
  int passed = 0;
  int total = 0;
  bool ok = true;
  for (const SuiteResult& suite : verify(options)) {
    out << (suite.ok() ? "PASS " : "FAIL ") << suite.name << ": " << suite.passed << "/" << suite.total << '\n';
    if (!suite.ok()) out << "     first failure: " << suite.first_failure << '\n';
    passed += suite.passed;
    total += suite.total;
    ok = ok && suite.ok();
  }
  out << (ok ? "PASS" : "FAIL") << " total: " << passed << "/" << total << '\n';
  return ok ? kExitOk : kExitInternal;
}

}  // namespace antiprism::cli
