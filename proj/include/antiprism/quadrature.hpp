#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
//
// The interval with the largest error estimate is bisected until the summed
// estimate drops below the requested tolerance. Ties are broken by creation
// order, so the subdivision sequence (and therefore the result) is
// bit-reproducible for fixed inputs.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace antiprism {

template <typename Scalar>
struct QuadratureResult {
  Scalar value = Scalar(0);
  Scalar abs_error_estimate = Scalar(0);
  long evaluations = 0;
  bool converged = false;
};

template <typename Scalar>
struct QuadratureOptions {
  Scalar rel_tol = Scalar(1e-10);
  Scalar abs_tol = Scalar(0);
  long max_evaluations = 1'000'000;
};

namespace detail {

// Kronrod abscissae on [0, 1]; odd indices (1, 3, 5, 7) are the Gauss nodes.
inline constexpr std::array<long double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};

inline constexpr std::array<long double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};

inline constexpr std::array<long double, 4> kGaussWeights = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <typename Scalar>
struct Segment {
  Scalar lo;
  Scalar hi;
  Scalar value;
  Scalar error;
  std::size_t id;
  bool live = true;
};

/// One 15-point Kronrod estimate with the embedded 7-point Gauss rule;
/// error = |K15 - G7|.
template <typename Scalar, typename F>
Segment<Scalar> gauss_kronrod_15(F& f, Scalar lo, Scalar hi, std::size_t id) {
  using std::abs;
  const Scalar center = (lo + hi) / Scalar(2);
  const Scalar half = (hi - lo) / Scalar(2);
  const Scalar fc = f(center);
  Scalar kronrod = Scalar(kKronrodWeights[7]) * fc;
  Scalar gauss = Scalar(kGaussWeights[3]) * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const Scalar dx = half * Scalar(kKronrodNodes[j]);
    const Scalar sum = f(center - dx) + f(center + dx);
    kronrod += Scalar(kKronrodWeights[j]) * sum;
    if (j % 2 == 1) gauss += Scalar(kGaussWeights[j / 2]) * sum;
  }
  return {lo, hi, kronrod * half, abs((kronrod - gauss) * half), id, true};
}

template <typename Scalar>
struct LargerError {
  const std::vector<Segment<Scalar>>* segments;
  bool operator()(std::size_t lhs, std::size_t rhs) const {
    const auto& l = (*segments)[lhs];
    const auto& r = (*segments)[rhs];
    if (l.error != r.error) return l.error < r.error;
    return l.id > r.id;
  }
};

}  // namespace detail

template <typename Scalar, typename F>
QuadratureResult<Scalar> integrate_adaptive(F&& f, Scalar lo, Scalar hi, const QuadratureOptions<Scalar>& opts) {
  using std::abs;
  using std::max;
  using Segment = detail::Segment<Scalar>;
  constexpr long kPerSegment = 15;

  std::vector<Segment> segments;
  segments.push_back(detail::gauss_kronrod_15(f, lo, hi, 0));
  QuadratureResult<Scalar> result;
  result.evaluations = kPerSegment;

  std::priority_queue<std::size_t, std::vector<std::size_t>, detail::LargerError<Scalar>> queue(
      detail::LargerError<Scalar>{&segments});
  queue.push(0);

  // Neumaier-compensated totals over all live segments, in index order.
  auto totals = [&segments](Scalar& value, Scalar& error) {
    Scalar sum(0), comp(0), err(0);
    for (const Segment& s : segments) {
      if (!s.live) continue;
      const Scalar t = sum + s.value;
      comp += abs(sum) >= abs(s.value) ? (sum - t) + s.value : (s.value - t) + sum;
      sum = t;
      err += s.error;
    }
    value = sum + comp;
    error = err;
  };
  auto target = [&opts](Scalar value) { return max(opts.rel_tol * abs(value), opts.abs_tol); };

  Scalar value = segments[0].value;
  Scalar error = segments[0].error;
  while (true) {
    if (error <= target(value)) {
      totals(value, error);
      if (error <= target(value)) {
        result.converged = true;
        break;
      }
    }
    if (queue.empty() || result.evaluations + 2 * kPerSegment > opts.max_evaluations) {
      totals(value, error);
      break;
    }

    const std::size_t worst = queue.top();
    queue.pop();
    const Segment parent = segments[worst];
    const Scalar mid = (parent.lo + parent.hi) / Scalar(2);
    if (!(parent.lo < mid && mid < parent.hi)) {
      continue;  // cannot be split further; its error stays in the total
    }
    segments[worst].live = false;

    const std::size_t left = segments.size();
    segments.push_back(detail::gauss_kronrod_15(f, parent.lo, mid, left));
    segments.push_back(detail::gauss_kronrod_15(f, mid, parent.hi, left + 1));
    result.evaluations += 2 * kPerSegment;
    queue.push(left);
    queue.push(left + 1);

    value += segments[left].value + segments[left + 1].value - parent.value;
    error += segments[left].error + segments[left + 1].error - parent.error;
  }

  result.value = value;
  result.abs_error_estimate = error;
  return result;
}

}  // namespace antiprism
