#pragma once

#include <Eigen/Core>

#include "kgc/coulomb.hpp"
#include "kgc/specfun.hpp"

namespace kgc {

enum class DensityModel { kg_li, kg_nli, sch };

const char* to_string(DensityModel model);

/// Radial profile in the dimensionless variable s = scale * r:
///
///   rho(s) = (c0 + c1/s) * s^(2q) * e^(-s) * Lt(s)^2,
///
/// where Lt is the orthonormal Laguerre polynomial Lt_k^a. The Klein-Gordon
/// Lorentz-invariant density has c1 > 0 (Coulomb term); the other models have
/// c1 = 0.
class RadialProfile {
 public:
  RadialProfile(double c0, double c1, double q, LaguerreParams laguerre);

  double c0() const noexcept { return c0_; }
  double c1() const noexcept { return c1_; }
  double q() const noexcept { return q_; }
  const LaguerreParams& laguerre() const noexcept { return params_; }

  double operator()(double s) const;
  double derivative(double s) const;
  /// ln rho(s); -inf at a node.
  double log_value(double s) const;

  /// Orthonormal Laguerre factor and its derivative.
  double poly(double s) const;
  double poly_derivative(double s) const;

  /// Exponent p of the leading behavior rho ~ s^p as s -> 0.
  double origin_exponent() const noexcept;
  /// Zeros of the profile on (0, inf), increasing.
  const Eigen::VectorXd& nodes() const noexcept { return nodes_; }

 private:
  double c0_;
  double c1_;
  double q_;
  LaguerreParams params_;
  double inv_norm_;
  Eigen::VectorXd nodes_;
};

/// Position density rho(r, theta) = D(r) |Y_lm(theta)|^2 with
/// D(r) = scale^3 * profile(scale * r). Immutable.
class ProbabilityDensity {
 public:
  ProbabilityDensity(DensityModel model, QuantumNumbers qn, CoulombSystem system,
                     RadialProfile profile, double scale, bool normalized);

  DensityModel model() const noexcept { return model_; }
  const QuantumNumbers& qn() const noexcept { return qn_; }
  const CoulombSystem& system() const noexcept { return system_; }
  const RadialProfile& profile() const noexcept { return profile_; }

  /// Inverse length converting r to the profile variable s.
  double scale() const noexcept { return scale_; }
  /// One reduced Compton wavelength expressed in s.
  double compton_in_s() const noexcept { return scale_ * system_.compton_length(); }
  /// False for densities that need not integrate to one (KG non-invariant).
  bool normalized() const noexcept { return normalized_; }

  double radial(double r) const;
  double radial_derivative(double r) const;
  double angular(double theta) const;
  double operator()(double r, double theta) const { return radial(r) * angular(theta); }

 private:
  DensityModel model_;
  QuantumNumbers qn_;
  CoulombSystem system_;
  RadialProfile profile_;
  double scale_;
  bool normalized_;
};

}  // namespace kgc
