#pragma once

// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// [0, inf). Both refine by halving the step in the transformed variable and
// reuse every previously evaluated node. Nodes cluster doubly-exponentially at
// the endpoints, so integrable x^p (p > -1) and logarithmic endpoint
// singularities need no special handling by the caller.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "kgc/errors.hpp"

namespace kgc {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_levels = 12;

  /// Throws DomainError unless tolerances are positive and max_levels >= 3.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;

  QuadratureResult& operator+=(const QuadratureResult& other) {
    value += other.value;
    error_estimate += other.error_estimate;
    evaluations += other.evaluations;
    return *this;
  }
};

inline void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("QuadratureConfig: tolerances must be positive");
  }
  if (max_levels < 3) {
    throw DomainError("QuadratureConfig: max_levels must be >= 3, got " +
                      std::to_string(max_levels));
  }
}

namespace detail {

// A node of a DE rule in the transformed variable t: abscissa and the
// Jacobian weight dx/dt. `valid` is false once the abscissa is no longer
// representable (underflowed onto an endpoint or overflowed).
struct DeNode {
  double x;
  double weight;
  bool valid;
};

// Sample spacing used to locate where the transformed integrand becomes
// negligible, and the hard limits of the transformed variable.
inline constexpr double kScanStep = 0.125;
inline constexpr double kNegligible = 1e-20;

template <class F, class Map>
QuadratureResult de_integrate(F&& f, Map&& map, double t_lo_limit, double t_hi_limit,
                              const QuadratureConfig& config, const char* name) {
  config.validate();
  std::int64_t evaluations = 0;

  auto term = [&](double t) -> double {
    const DeNode node = map(t);
    if (!node.valid || node.weight == 0.0) return 0.0;
    const double y = f(node.x);
    ++evaluations;
    if (!std::isfinite(y)) {
      throw EvaluationError(std::string(name) + ": integrand is not finite at x = " +
                            std::to_string(node.x));
    }
    return y * node.weight;
  };

  // Find the effective transformed range on each side: walk outward until
  // three consecutive samples are negligible against the largest one seen.
  const double center = term(0.0);
  double peak = std::abs(center);
  auto scan = [&](double direction, double limit) {
    double t = 0.0;
    double last_significant = 0.0;
    int quiet = 0;
    while (std::abs(t) < limit) {
      t += direction * kScanStep;
      const double v = std::abs(term(t));
      peak = std::max(peak, v);
      if (v <= kNegligible * peak) {
        // Before anything nonzero is seen the integrand may simply live at
        // another scale; keep walking.
        if (peak > 0.0 && ++quiet >= 3) break;
      } else {
        quiet = 0;
        last_significant = t;
      }
    }
    return std::abs(last_significant) + kScanStep;
  };
  const double t_hi = std::min(scan(1.0, t_hi_limit), t_hi_limit);
  const double t_lo = std::min(scan(-1.0, t_lo_limit), t_lo_limit);

  // Level 0: unit step.
  double h = 1.0;
  double sum = center;
  for (int k = 1; k <= static_cast<int>(t_hi); ++k) sum += term(k);
  for (int k = 1; k <= static_cast<int>(t_lo); ++k) sum += term(-k);
  double estimate = h * sum;
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= config.max_levels; ++level) {
    h *= 0.5;
    double fresh = 0.0;
    for (double t = h; t <= t_hi; t += 2.0 * h) fresh += term(t);
    for (double t = h; t <= t_lo; t += 2.0 * h) fresh += term(-t);
    const double refined = 0.5 * estimate + h * fresh;
    error = std::abs(refined - estimate);
    estimate = refined;
    if (level >= 3 && error <= std::max(config.abs_tol, config.rel_tol * std::abs(estimate))) {
      return {estimate, error, evaluations};
    }
  }
  throw ConvergenceError(std::string(name) + ": no convergence after " +
                             std::to_string(config.max_levels) + " levels (estimate " +
                             std::to_string(estimate) + ", error " + std::to_string(error) + ")",
                         estimate, error);
}

}  // namespace detail

/// Integral of f over [0, inf) by the exp-sinh rule x = exp(pi/2 sinh t).
/// f may diverge at 0 like x^p with p > -1 and must decay at infinity.
template <class F>
QuadratureResult integrate_semi_infinite(F&& f, const QuadratureConfig& config = {}) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr double kMinX = 1e-300;
  constexpr double kMaxX = 1e100;
  auto map = [&](double t) -> detail::DeNode {
    const double x = std::exp(kHalfPi * std::sinh(t));
    if (!(x >= kMinX && x <= kMaxX)) return {x, 0.0, false};
    return {x, x * kHalfPi * std::cosh(t), true};
  };
  // sinh(t) range that keeps x within [kMinX, kMaxX].
  const double t_lo = std::asinh(-std::log(kMinX) / kHalfPi);
  const double t_hi = std::asinh(std::log(kMaxX) / kHalfPi);
  return detail::de_integrate(std::forward<F>(f), map, t_lo, t_hi, config,
                              "integrate_semi_infinite");
}

/// Integral of f over [a, b] by the tanh-sinh rule. Abscissae are formed as
/// an offset from the nearer endpoint, so f sees points arbitrarily close to
/// a singular endpoint without cancellation. Near a nonzero endpoint the
/// abscissa itself can only resolve offsets down to the spacing of doubles
/// there, which limits the accuracy for singular integrands at such an end.
template <class F>
QuadratureResult integrate_interval(F&& f, double a, double b, const QuadratureConfig& config = {}) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_interval: need finite a < b");
  }
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  const double half = 0.5 * (b - a);
  auto map = [&](double t) -> detail::DeNode {
    const double u = kHalfPi * std::sinh(std::abs(t));
    const double cu = std::cosh(u);
    // 1 - tanh(u), without cancellation.
    const double offset = half * std::exp(-u) / cu;
    double x = t >= 0.0 ? b - offset : a + offset;
    const double w = half * kHalfPi * std::cosh(t) / (cu * cu);
    if (!(offset > 0.0) || !std::isfinite(w)) return {x, 0.0, false};
    // Offsets below the spacing of doubles near a nonzero endpoint round onto
    // it; use the nearest interior point so their weight is not lost.
    if (x >= b) x = std::nextafter(b, a);
    if (x <= a) x = std::nextafter(a, b);
    if (!(x > a && x < b)) return {x, 0.0, false};
    return {x, w, true};
  };
  constexpr double kTLimit = 6.5;
  return detail::de_integrate(std::forward<F>(f), map, kTLimit, kTLimit, config,
                              "integrate_interval");
}

}  // namespace kgc
