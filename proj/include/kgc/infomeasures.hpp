#pragma once

#include "kgc/density.hpp"
#include "kgc/quadrature.hpp"

namespace kgc {

/// Default inner cutoff, in reduced Compton wavelengths hbar/(m0 c).
inline constexpr double kDefaultOriginCutoff = 1e-3;

/// Options shared by the density functionals.
///
/// `origin_cutoff` only matters for radial integrals that are not integrable
/// at r = 0. This happens for the Klein-Gordon Lorentz-invariant density of
/// S states, which behaves like r^(2l'-1) with l' < 0: its Fisher
/// information always diverges, and its disequilibrium diverges once
/// l' <= -1/4. Such integrals are taken over r >= origin_cutoff * hbar/(m0 c)
/// and the result is flagged as regularized. A cutoff of 0 requests the exact
/// functional and raises DivergenceError instead. Convergent integrals always
/// start at r = 0.
struct MeasureOptions {
  QuadratureConfig quadrature{};
  double origin_cutoff = kDefaultOriginCutoff;
};

/// Integral of rho over all space (radial quadrature times angular quadrature).
double total_probability(const ProbabilityDensity& d, const QuadratureConfig& config = {});

/// S = -int rho ln rho d^3r, split as radial plus angular entropy.
double shannon_entropy(const ProbabilityDensity& d, const MeasureOptions& options = {});

/// I = I_radial + <r^-2> * A_lm with
///   I_radial = int (D')^2 / D r^2 dr,  <r^-2> = int D dr,
///   A_lm     = int (d_theta |Y|^2)^2 / |Y|^2 dOmega = 4l(l+1) - 2|m|(2l+1).
struct FisherParts {
  double radial = 0.0;
  double inverse_r2 = 0.0;
  double angular = 0.0;
  bool regularized = false;

  double total() const noexcept { return radial + inverse_r2 * angular; }
};

FisherParts fisher_parts(const ProbabilityDensity& d, const MeasureOptions& options = {});
double fisher_information(const ProbabilityDensity& d, const MeasureOptions& options = {});

/// <rho> = int rho^2 d^3r.
double disequilibrium(const ProbabilityDensity& d, const MeasureOptions& options = {});

/// Whether the exact Fisher information / disequilibrium is infinite because
/// of the behavior of the density at the origin.
bool fisher_diverges(const ProbabilityDensity& d);
bool disequilibrium_diverges(const ProbabilityDensity& d);

/// J = exp(2S/3) / (2 pi e).
double entropic_power(double shannon);
/// C_FS = I * J.
double fisher_shannon(double fisher, double power);
/// C_LMC = <rho> * exp(S).
double lmc_complexity(double diseq, double shannon);
/// 1 - c_sch / c_kg; 0 without relativistic effect, -> 1 ultrarelativistic.
double zeta_fs(double c_sch, double c_kg);

/// -int |Y|^2 ln |Y|^2 dOmega.
double angular_entropy(int l, int m, const QuadratureConfig& config = {});
/// Closed form 4l(l+1) - 2|m|(2l+1).
double angular_fisher(int l, int m);
/// int |Y|^4 dOmega.
double angular_disequilibrium(int l, int m, const QuadratureConfig& config = {});

struct InfoReport {
  DensityModel model;
  QuantumNumbers qn;
  double Z;
  double shannon_S;
  double fisher_I;
  double entropic_power_J;
  double disequilibrium;
  double c_fs;
  double c_lmc;
  /// True when an origin cutoff was applied to some radial integral.
  bool regularized;
};

/// All measures of a unit-normalized density. Throws DomainError for
/// non-normalized densities.
InfoReport info_report(const ProbabilityDensity& d, const MeasureOptions& options = {});

}  // namespace kgc
