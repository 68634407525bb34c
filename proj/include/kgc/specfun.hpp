#pragma once

#include <Eigen/Core>

namespace kgc {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Degree and parameter of a generalized Laguerre polynomial L_k^alpha.
/// The weight x^alpha e^{-x} is integrable on [0, inf) only for alpha > -1,
/// which the constructor enforces.
class LaguerreParams {
 public:
  LaguerreParams(int degree, double alpha);

  int degree() const noexcept { return degree_; }
  double alpha() const noexcept { return alpha_; }

 private:
  int degree_;
  double alpha_;
};

/// L_k^alpha(x) by upward three-term recurrence in the degree.
double laguerre(const LaguerreParams& p, double x);

/// d/dx L_k^alpha(x) = -L_{k-1}^{alpha+1}(x).
double laguerre_derivative(const LaguerreParams& p, double x);

/// Squared norm h_k = Gamma(k+alpha+1)/k! of L_k^alpha under x^alpha e^{-x}.
/// Throws RangeError if it is not representable.
double laguerre_norm_sq(const LaguerreParams& p);

/// L_k^alpha(x) / sqrt(h_k): orthonormal under x^alpha e^{-x} on [0, inf).
double laguerre_orthonormal(const LaguerreParams& p, double x);

/// The k zeros of L_k^alpha in increasing order. Eigenvalues of the Jacobi
/// matrix, polished by Newton steps on the recurrence.
Eigen::VectorXd laguerre_zeros(const LaguerreParams& p);

/// Fully normalized associated Legendre function, |Y_lm(theta, phi)| up to
/// sign, together with its theta derivative.
struct NormalizedLegendre {
  double value;
  double dtheta;
};

NormalizedLegendre normalized_legendre(int l, int m, double theta);

/// |Y_lm(theta, phi)|^2, independent of phi. Integrates to 1 over the sphere.
double sph_harmonic_sq(int l, int m, double theta);

/// The l - |m| zeros of P_l^m(x) in (-1, 1), increasing. These are the zeros
/// of the Gegenbauer polynomial C_{l-|m|}^{(|m|+1/2)}.
Eigen::VectorXd legendre_zeros(int l, int m);

}  // namespace kgc
