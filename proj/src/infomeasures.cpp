#include "kgc/infomeasures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "kgc/errors.hpp"

namespace kgc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// Integral over [lower, inf) of s^p h(s) with h bounded near s = 0. The range
// is split at the profile nodes and at s = 1. A first segment starting at 0
// with -1 < p < 0 is mapped by s = y^(1/(p+1)), which turns s^p ds into a
// constant; one starting at lower > 0 with p < 0 is mapped by s = lower e^v.
template <class H>
QuadratureResult radial_integral(double p, H&& h, const Eigen::VectorXd& nodes, double lower,
                                 const QuadratureConfig& config) {
  if (lower == 0.0 && p <= -1.0) {
    throw DivergenceError("radial integrand ~ s^" + std::to_string(p) +
                          " is not integrable at the origin");
  }
  auto f = [&](double s) { return std::pow(s, p) * h(s); };

  std::vector<double> breaks;
  for (Eigen::Index i = 0; i < nodes.size(); ++i) {
    if (nodes(i) > lower) breaks.push_back(nodes(i));
  }
  if (lower < 1.0 && std::none_of(breaks.begin(), breaks.end(),
                                  [](double b) { return std::abs(b - 1.0) < 1e-6; })) {
    breaks.push_back(1.0);
  }
  std::sort(breaks.begin(), breaks.end());

  QuadratureResult total;
  if (breaks.empty()) {
    return integrate_semi_infinite([&](double x) { return f(lower + x); }, config);
  }
  double a = lower;
  const double first = breaks.front();
  if (lower == 0.0 && p < 0.0) {
    const double q = 1.0 / (p + 1.0);
    total += integrate_interval([&](double y) { return q * h(std::pow(y, q)); }, 0.0,
                                std::pow(first, p + 1.0), config);
  } else if (lower > 0.0 && p < 0.0) {
    total += integrate_interval(
        [&](double v) {
          const double s = lower * std::exp(v);
          return s * f(s);
        },
        0.0, std::log(first / lower), config);
  } else {
    total += integrate_interval(f, a, first, config);
  }
  a = first;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    total += integrate_interval(f, a, breaks[i], config);
    a = breaks[i];
  }
  total += integrate_semi_infinite([&](double x) { return f(a + x); }, config);
  return total;
}

// Theta integral over [0, pi] of g(theta) sin(theta), split at the nodes of
// the associated Legendre function.
template <class G>
double angular_integral(int l, int m, G&& g, const QuadratureConfig& config) {
  std::vector<double> breaks{0.0};
  const Eigen::VectorXd zeros = legendre_zeros(l, m);
  for (Eigen::Index i = zeros.size() - 1; i >= 0; --i) breaks.push_back(std::acos(zeros(i)));
  breaks.push_back(kPi);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    sum += integrate_interval([&](double t) { return g(t) * std::sin(t); }, breaks[i],
                              breaks[i + 1], config)
               .value;
  }
  return 2.0 * kPi * sum;
}

void require_normalized(const ProbabilityDensity& d, const char* what) {
  if (!d.normalized()) {
    throw DomainError(std::string(what) + ": density is not unit-normalized (" +
                      to_string(d.model()) + ")");
  }
}

// Lower integration limit in s for an integral with origin exponent p.
double lower_limit(const ProbabilityDensity& d, bool divergent, const MeasureOptions& options,
                   const char* what) {
  if (!divergent) return 0.0;
  if (!(options.origin_cutoff > 0.0)) {
    throw DivergenceError(std::string(what) + " of the " + to_string(d.model()) + " density " +
                          to_string(d.qn()) + " diverges at the origin; set an origin cutoff");
  }
  return options.origin_cutoff * d.compton_in_s();
}

struct RadialFisher {
  double value;
  bool regularized;
};

RadialFisher radial_fisher(const ProbabilityDensity& d, const MeasureOptions& options) {
  const RadialProfile& pr = d.profile();
  const double q = pr.q();
  const double c0 = pr.c0();
  const double c1 = pr.c1();
  const bool divergent = fisher_diverges(d);
  const double lower = lower_limit(d, divergent, options, "Fisher information");

  // (rho')^2/rho s^2 = s^(2q-1) e^{-s} B^2 / w with w = c0 s + c1 and
  // B = 2 w K - c1 Lt, K = (q - s/2) Lt + s Lt'. For c1 = 0 this reduces to
  // s^(2q) 4 c0 e^{-s} K^2.
  auto k_factor = [&](double s, double lt) { return (q - 0.5 * s) * lt + s * pr.poly_derivative(s); };
  QuadratureResult r;
  if (c1 > 0.0) {
    r = radial_integral(
        2.0 * q - 1.0,
        [&](double s) {
          const double lt = pr.poly(s);
          const double w = c0 * s + c1;
          const double b = 2.0 * w * k_factor(s, lt) - c1 * lt;
          return std::exp(-s) * b * b / w;
        },
        pr.nodes(), lower, options.quadrature);
  } else {
    r = radial_integral(
        2.0 * q,
        [&](double s) {
          const double kf = k_factor(s, pr.poly(s));
          return 4.0 * c0 * std::exp(-s) * kf * kf;
        },
        pr.nodes(), lower, options.quadrature);
  }
  const double scale = d.scale();
  return {scale * scale * r.value, divergent};
}

// <r^-2> = int D dr = scale^2 int rho ds.
double inverse_r2(const ProbabilityDensity& d, const QuadratureConfig& config) {
  const RadialProfile& pr = d.profile();
  const double c0 = pr.c0();
  const double c1 = pr.c1();
  QuadratureResult r;
  if (c1 > 0.0) {
    r = radial_integral(
        2.0 * pr.q() - 1.0,
        [&](double s) {
          const double lt = pr.poly(s);
          return (c0 * s + c1) * std::exp(-s) * lt * lt;
        },
        pr.nodes(), 0.0, config);
  } else {
    r = radial_integral(
        2.0 * pr.q(),
        [&](double s) {
          const double lt = pr.poly(s);
          return c0 * std::exp(-s) * lt * lt;
        },
        pr.nodes(), 0.0, config);
  }
  return d.scale() * d.scale() * r.value;
}

}  // namespace

bool fisher_diverges(const ProbabilityDensity& d) {
  const RadialProfile& pr = d.profile();
  return pr.c1() > 0.0 && 2.0 * pr.q() - 1.0 <= -1.0;
}

bool disequilibrium_diverges(const ProbabilityDensity& d) {
  const RadialProfile& pr = d.profile();
  return pr.c1() > 0.0 && 4.0 * pr.q() <= -1.0;
}

double total_probability(const ProbabilityDensity& d, const QuadratureConfig& config) {
  const RadialProfile& pr = d.profile();
  const double c0 = pr.c0();
  const double c1 = pr.c1();
  // rho s^2 = s^(2q+1) (c0 s + c1) e^{-s} Lt^2
  const double radial = radial_integral(
                            2.0 * pr.q() + 1.0,
                            [&](double s) {
                              const double lt = pr.poly(s);
                              return (c0 * s + c1) * std::exp(-s) * lt * lt;
                            },
                            pr.nodes(), 0.0, config)
                            .value;
  const int l = d.qn().l();
  const int m = d.qn().m();
  const double angular =
      angular_integral(l, m, [&](double t) { return sph_harmonic_sq(l, m, t); }, config);
  return radial * angular;
}

double angular_entropy(int l, int m, const QuadratureConfig& config) {
  return -angular_integral(
      l, m,
      [&](double t) {
        const double y2 = sph_harmonic_sq(l, m, t);
        return y2 > 0.0 ? y2 * std::log(y2) : 0.0;
      },
      config);
}

double angular_fisher(int l, int m) {
  if (l < 0 || std::abs(m) > l) throw DomainError("angular_fisher: need |m| <= l");
  return 4.0 * l * (l + 1.0) - 2.0 * std::abs(m) * (2.0 * l + 1.0);
}

double angular_disequilibrium(int l, int m, const QuadratureConfig& config) {
  return angular_integral(
      l, m,
      [&](double t) {
        const double y2 = sph_harmonic_sq(l, m, t);
        return y2 * y2;
      },
      config);
}

double shannon_entropy(const ProbabilityDensity& d, const MeasureOptions& options) {
  require_normalized(d, "shannon_entropy");
  const RadialProfile& pr = d.profile();
  const double c0 = pr.c0();
  const double c1 = pr.c1();
  // -rho ln rho s^2 = s^(2q+1) * [-(c0 s + c1) e^{-s} Lt^2 ln rho]
  const double radial_s = radial_integral(
                              2.0 * pr.q() + 1.0,
                              [&](double s) {
                                const double lt = pr.poly(s);
                                const double mass = (c0 * s + c1) * std::exp(-s) * lt * lt;
                                if (mass == 0.0) return 0.0;
                                return -mass * pr.log_value(s);
                              },
                              pr.nodes(), 0.0, options.quadrature)
                              .value;
  // D(r) = scale^3 rho(scale r)  =>  S_r = S_s - 3 ln(scale).
  const double radial = radial_s - 3.0 * std::log(d.scale());
  return radial + angular_entropy(d.qn().l(), d.qn().m(), options.quadrature);
}

FisherParts fisher_parts(const ProbabilityDensity& d, const MeasureOptions& options) {
  require_normalized(d, "fisher_information");
  FisherParts parts;
  const RadialFisher rf = radial_fisher(d, options);
  parts.radial = rf.value;
  parts.regularized = rf.regularized;
  parts.angular = angular_fisher(d.qn().l(), d.qn().m());
  if (parts.angular != 0.0) parts.inverse_r2 = inverse_r2(d, options.quadrature);
  return parts;
}

double fisher_information(const ProbabilityDensity& d, const MeasureOptions& options) {
  return fisher_parts(d, options).total();
}

double disequilibrium(const ProbabilityDensity& d, const MeasureOptions& options) {
  require_normalized(d, "disequilibrium");
  const RadialProfile& pr = d.profile();
  const double c0 = pr.c0();
  const double c1 = pr.c1();
  const double lower =
      lower_limit(d, disequilibrium_diverges(d), options, "disequilibrium");
  QuadratureResult r;
  if (c1 > 0.0) {
    // rho^2 s^2 = s^(4q) (c0 s + c1)^2 e^{-2s} Lt^4
    r = radial_integral(
        4.0 * pr.q(),
        [&](double s) {
          const double lt = pr.poly(s);
          const double w = (c0 * s + c1) * lt * lt;
          return std::exp(-2.0 * s) * w * w;
        },
        pr.nodes(), lower, options.quadrature);
  } else {
    r = radial_integral(
        4.0 * pr.q() + 2.0,
        [&](double s) {
          const double lt = pr.poly(s);
          const double w = c0 * lt * lt;
          return std::exp(-2.0 * s) * w * w;
        },
        pr.nodes(), lower, options.quadrature);
  }
  const double scale = d.scale();
  return scale * scale * scale * r.value *
         angular_disequilibrium(d.qn().l(), d.qn().m(), options.quadrature);
}

double entropic_power(double shannon) {
  return std::exp(2.0 * shannon / 3.0) / (2.0 * kPi * kE);
}

double fisher_shannon(double fisher, double power) {
  if (!(fisher >= 0.0) || !(power > 0.0)) {
    throw DomainError("fisher_shannon: need I >= 0 and J > 0");
  }
  return fisher * power;
}

double lmc_complexity(double diseq, double shannon) {
  if (!(diseq > 0.0)) throw DomainError("lmc_complexity: disequilibrium must be positive");
  return diseq * std::exp(shannon);
}

double zeta_fs(double c_sch, double c_kg) {
  if (!(c_sch > 0.0) || !(c_kg > 0.0)) throw DomainError("zeta_fs: complexities must be positive");
  return 1.0 - c_sch / c_kg;
}

InfoReport info_report(const ProbabilityDensity& d, const MeasureOptions& options) {
  require_normalized(d, "info_report");
  const double s = shannon_entropy(d, options);
  const FisherParts fisher = fisher_parts(d, options);
  const double diseq = disequilibrium(d, options);
  const double j = entropic_power(s);
  const double i = fisher.total();
  return InfoReport{d.model(),
                    d.qn(),
                    d.system().Z,
                    s,
                    i,
                    j,
                    diseq,
                    fisher_shannon(i, j),
                    lmc_complexity(diseq, s),
                    fisher.regularized || disequilibrium_diverges(d)};
}

}  // namespace kgc
