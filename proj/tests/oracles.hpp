#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

/// Literal existence margin 1 + cosh a - 2cosh c + 2(1 - cosh c)cos(pi/n).
inline double margin_literal(int n, double a, double c) {
  const double k = std::cos(std::numbers::pi / n);
  return 1 + std::cosh(a) - 2 * std::cosh(c) + 2 * (1 - std::cosh(c)) * k;
}

/// Literal R(t) of the volume integrand.
inline double radicand_literal(int n, double a, double t) {
  const double ca = std::cosh(a);
  const double x = std::cosh(t);
  const double s = std::sinh(t);
  return 1 - ca * (2 + ca) + 2 * x * x + 4 * (ca - 1) * x * std::cos(std::numbers::pi / n) -
         2 * s * s * std::cos(2 * std::numbers::pi / n);
}

/// Root of a sign-changing function on [lo, hi] by bisection to full precision.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Octahedron (n = 3) volume integrand with (t - c0) supplied separately;
/// the radical (3cosh t - cosh a - 2)(cosh a + cosh t) is rewritten through
/// 3cosh t - cosh a - 2 = 3(cosh t - cosh c0) = 6 sinh((t+c0)/2) sinh((t-c0)/2).
/// Evaluated in long double: the numerator cancels heavily for small a and t.
inline double octahedron_integrand(double a_in, double c0_in, double t_in, double t_minus_c0) {
  using L = long double;
  const L a = a_in, c0 = c0_in, t = t_in;
  const L ca = std::cosh(a);
  const L ct = std::cosh(t);
  const L num = a * (2 * ct - 1) * std::sinh(a) * std::sinh(t) - t * (ca - 1) * (1 + ca + 2 * ct * (ct - 1));
  const L first = 6 * std::sinh((t + c0) / 2) * std::sinh(L(t_minus_c0) / 2);
  return double(num / ((std::cosh(2 * t) - ca) * std::sqrt(first * (ca + ct))));
}

/// Literal octahedron integrand.
inline double octahedron_integrand_literal(double a, double t) {
  const double ca = std::cosh(a);
  const double ct = std::cosh(t);
  const double num = a * (2 * ct - 1) * std::sinh(a) * std::sinh(t) - t * (ca - 1) * (1 + ca + 2 * ct * (ct - 1));
  return num / ((std::cosh(2 * t) - ca) * std::sqrt((3 * ct - ca - 2) * (ca + ct)));
}

/// Octahedron volume 3 * int_{c0}^{c} by composite midpoint sums in
/// s = sqrt(t - c0), refined by halving and Richardson-extrapolated.
inline double octahedron_volume_midpoint(double a, double c) {
  const double c0 = std::acosh((std::cosh(a) + 2) / 3);
  const double span = std::sqrt(c - c0);
  auto g = [&](double s) { return 2 * s * octahedron_integrand(a, c0, c0 + s * s, s * s); };
  auto midpoint = [&](int cells) {
    const double h = span / cells;
    double sum = 0;
    for (int i = 0; i < cells; ++i) sum += g((i + 0.5) * h);
    return sum * h;
  };
  std::vector<std::vector<double>> table;
  int cells = 4;
  for (int k = 0; k < 16; ++k, cells *= 2) {
    std::vector<double> row{midpoint(cells)};
    double factor = 4;
    for (int j = 1; j <= k; ++j, factor *= 4) {
      row.push_back(row[j - 1] + (row[j - 1] - table[k - 1][j - 1]) / (factor - 1));
    }
    table.push_back(row);
    if (k >= 3 && std::abs(table[k][k] - table[k - 1][k - 1]) <= 1e-14 * std::abs(table[k][k])) break;
  }
  return 3 * table.back().back();
}

/// Tanh-sinh quadrature on [lo, hi] for integrands singular at lo. The
/// integrand receives (x, x - lo) with the offset computed without
/// cancellation. Step halving until successive sums agree to `tol`.
inline double tanh_sinh(const std::function<double(double, double)>& f, double lo, double hi, double tol) {
  const double width = hi - lo;
  const double half_pi = std::numbers::pi / 2;
  auto term = [&](double u) {
    const double y = half_pi * std::sinh(u);
    const double offset = width / (1 + std::exp(-2 * y));
    if (!(offset > 0) || offset >= width) return 0.0;
    const double ch = std::cosh(y);
    const double weight = width / 2 * half_pi * std::cosh(u) / (ch * ch);
    return weight * f(lo + offset, offset);
  };
  const double u_max = 6.5;
  double h = 0.5;
  double sum = term(0);
  for (double u = h; u <= u_max; u += h) sum += term(u) + term(-u);
  double estimate = sum * h;
  for (int level = 0; level < 12; ++level) {
    h /= 2;
    for (double u = h; u <= u_max; u += 2 * h) sum += term(u) + term(-u);
    const double next = sum * h;
    if (std::abs(next - estimate) <= tol * std::abs(next) && level >= 2) return next;
    estimate = next;
  }
  return estimate;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240613);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace oracle
