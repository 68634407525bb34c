#include "kgc/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "kgc/errors.hpp"

namespace kgc {

namespace {

// Riemann zeta(k), k = 2..31, for the Taylor series of ln Gamma(1+e).
constexpr std::array<double, 30> kZeta = {
    1.6449340668482264, 1.2020569031595943, 1.0823232337111382,
    1.0369277551433699, 1.0173430619844491, 1.0083492773819228,
    1.0040773561979443, 1.0020083928260822, 1.0009945751278181,
    1.0004941886041195, 1.0002460865533080, 1.0001227133475785,
    1.0000612481350587, 1.0000305882363070, 1.0000152822594087,
    1.0000076371976379, 1.0000038172932650, 1.0000019082127166,
    1.0000009539620339, 1.0000004769329868, 1.0000002384505027,
    1.0000001192199260, 1.0000000596081891, 1.0000000298035035,
    1.0000000149015548, 1.0000000074507118, 1.0000000037252903,
    1.0000000018626597, 1.0000000009313274, 1.0000000004656629};

constexpr double kEulerGamma = 0.57721566490153286061;

// ln Gamma(1+e) = -gamma_E e + sum_k zeta(k) (-e)^k / k, for |e| <= 0.25.
double log_gamma_1p(double e) {
  double sum = 0.0;
  double power = -e;
  for (std::size_t i = 0; i < kZeta.size(); ++i) {
    power *= -e;
    const int k = static_cast<int>(i) + 2;
    sum += kZeta[i] * power / k;
  }
  return -kEulerGamma * e + sum;
}

// Stirling series, accurate to rounding for x >= 10.
double log_gamma_stirling(double x) {
  constexpr std::array<double, 8> kB = {
      1.0 / 12.0,         -1.0 / 360.0,         1.0 / 1260.0,
      -1.0 / 1680.0,      1.0 / 1188.0,         -691.0 / 360360.0,
      1.0 / 156.0,        -3617.0 / 122400.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double term = inv;
  for (double b : kB) {
    series += b * term;
    term *= inv2;
  }
  constexpr double kHalfLog2Pi = 0.91893853320467274178;
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " +
                      std::to_string(x));
  }
  if (std::abs(x - 1.0) <= 0.25) return log_gamma_1p(x - 1.0);
  if (std::abs(x - 2.0) <= 0.25) return log_gamma_1p(x - 2.0) + std::log1p(x - 2.0);
  if (x >= 10.0) return log_gamma_stirling(x);

  double shifted = x;
  double product = 1.0;
  while (shifted < 10.0) {
    product *= shifted;
    shifted += 1.0;
  }
  return log_gamma_stirling(shifted) - std::log(product);
}

LaguerreParams::LaguerreParams(int degree, double alpha) : degree_(degree), alpha_(alpha) {
  if (degree < 0) {
    throw DomainError("LaguerreParams: degree must be >= 0, got " + std::to_string(degree));
  }
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("LaguerreParams: alpha must be finite and > -1, got " +
                      std::to_string(alpha));
  }
}

double laguerre(const LaguerreParams& p, double x) {
  const int k = p.degree();
  const double a = p.alpha();
  if (k == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + a - x) * curr - (j + a) * prev) / (j + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double laguerre_derivative(const LaguerreParams& p, double x) {
  if (p.degree() == 0) return 0.0;
  return -laguerre(LaguerreParams(p.degree() - 1, p.alpha() + 1.0), x);
}

double laguerre_norm_sq(const LaguerreParams& p) {
  const double k = p.degree();
  const double log_h = log_gamma(k + p.alpha() + 1.0) - log_gamma(k + 1.0);
  const double h = std::exp(log_h);
  if (!std::isfinite(h) || h == 0.0) {
    throw RangeError("laguerre_norm_sq: Gamma(k+alpha+1)/k! not representable for k=" +
                     std::to_string(p.degree()) + ", alpha=" + std::to_string(p.alpha()));
  }
  return h;
}

double laguerre_orthonormal(const LaguerreParams& p, double x) {
  return laguerre(p, x) / std::sqrt(laguerre_norm_sq(p));
}

Eigen::VectorXd laguerre_zeros(const LaguerreParams& p) {
  const int k = p.degree();
  const double a = p.alpha();
  Eigen::VectorXd zeros(k);
  if (k == 0) return zeros;

  Eigen::VectorXd diag(k);
  Eigen::VectorXd sub(std::max(k - 1, 0));
  for (int i = 0; i < k; ++i) diag(i) = 2.0 * i + a + 1.0;
  for (int i = 1; i < k; ++i) sub(i - 1) = -std::sqrt(i * (i + a));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  zeros = solver.eigenvalues();

  for (int i = 0; i < k; ++i) {
    double x = zeros(i);
    for (int it = 0; it < 3; ++it) {
      const double d = laguerre_derivative(p, x);
      if (d == 0.0) break;
      const double step = laguerre(p, x) / d;
      if (!std::isfinite(step)) break;
      x -= step;
    }
    zeros(i) = x;
  }
  return zeros;
}

NormalizedLegendre normalized_legendre(int l, int m, double theta) {
  if (l < 0 || std::abs(m) > l) {
    throw DomainError("normalized_legendre: need l >= 0 and |m| <= l, got l=" +
                      std::to_string(l) + ", m=" + std::to_string(m));
  }
  const int am = std::abs(m);
  const double x = std::cos(theta);
  const double sn = std::sin(theta);

  // Start from P_m^m = c_m sin^m(theta) with the 1/(4 pi) normalization folded in.
  double pmm = std::sqrt(1.0 / (4.0 * std::numbers::pi));
  for (int i = 1; i <= am; ++i) pmm *= -std::sqrt((2.0 * i + 1.0) / (2.0 * i));
  double dpmm = 0.0;
  if (am == 0) {
    dpmm = 0.0;
  } else {
    dpmm = pmm * am * std::pow(sn, am - 1) * x;
    pmm *= std::pow(sn, am);
  }
  if (l == am) return {pmm, dpmm};

  double p_prev = pmm;
  double d_prev = dpmm;
  const double f1 = std::sqrt(2.0 * am + 3.0);
  double p_curr = f1 * x * pmm;
  double d_curr = f1 * (-sn * pmm + x * dpmm);
  for (int ll = am + 2; ll <= l; ++ll) {
    const double a = std::sqrt((4.0 * ll * ll - 1.0) / (double(ll) * ll - double(am) * am));
    const double b = std::sqrt((double(ll - 1) * (ll - 1) - double(am) * am) /
                               (4.0 * (ll - 1) * (ll - 1) - 1.0));
    const double p_next = a * (x * p_curr - b * p_prev);
    const double d_next = a * (-sn * p_curr + x * d_curr - b * d_prev);
    p_prev = p_curr;
    d_prev = d_curr;
    p_curr = p_next;
    d_curr = d_next;
  }
  return {p_curr, d_curr};
}

double sph_harmonic_sq(int l, int m, double theta) {
  const double v = normalized_legendre(l, m, theta).value;
  return v * v;
}

Eigen::VectorXd legendre_zeros(int l, int m) {
  if (l < 0 || std::abs(m) > l) {
    throw DomainError("legendre_zeros: need l >= 0 and |m| <= l");
  }
  const int k = l - std::abs(m);
  const double lambda = std::abs(m) + 0.5;
  Eigen::VectorXd zeros(k);
  if (k == 0) return zeros;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd sub(k - 1);
  for (int j = 1; j < k; ++j) {
    sub(j - 1) = std::sqrt(j * (j + 2.0 * lambda - 1.0) / (4.0 * (j + lambda) * (j + lambda - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  zeros = solver.eigenvalues();
  return zeros;
}

}  // namespace kgc
