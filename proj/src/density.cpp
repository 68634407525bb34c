#include "kgc/density.hpp"

#include <cmath>
#include <limits>

#include "kgc/errors.hpp"

namespace kgc {

const char* to_string(DensityModel model) {
  switch (model) {
    case DensityModel::kg_li: return "KG";
    case DensityModel::kg_nli: return "KG-NLI";
    case DensityModel::sch: return "SCH";
  }
  return "?";
}

RadialProfile::RadialProfile(double c0, double c1, double q, LaguerreParams laguerre)
    : c0_(c0),
      c1_(c1),
      q_(q),
      params_(laguerre),
      inv_norm_(1.0 / std::sqrt(laguerre_norm_sq(laguerre))),
      nodes_(laguerre_zeros(laguerre)) {
  if (!(c0 >= 0.0) || !(c1 >= 0.0) || !(c0 + c1 > 0.0)) {
    throw DomainError("RadialProfile: need c0, c1 >= 0 and not both zero");
  }
  if (!(2.0 * q > -1.0)) throw DomainError("RadialProfile: need q > -1/2");
}

double RadialProfile::poly(double s) const { return kgc::laguerre(params_, s) * inv_norm_; }

double RadialProfile::poly_derivative(double s) const {
  return kgc::laguerre_derivative(params_, s) * inv_norm_;
}

double RadialProfile::operator()(double s) const {
  const double lt = poly(s);
  const double shape = std::exp(-s) * lt * lt;
  // Past the underflow of e^{-s} the power could overflow; rho is 0 there.
  if (shape == 0.0) return 0.0;
  if (c1_ == 0.0) return c0_ * std::pow(s, 2.0 * q_) * shape;
  return (c0_ * s + c1_) * std::pow(s, 2.0 * q_ - 1.0) * shape;
}

double RadialProfile::derivative(double s) const {
  // With rho = w s^(2q-1) e^{-s} Lt^2, w = c0 s + c1:
  //   rho' = s^(2q-2) e^{-s} [c0 s Lt^2 + w ((2q-1-s) Lt^2 + 2 s Lt Lt')].
  // A single power of s keeps tiny s free of inf * 0.
  const double envelope = std::exp(-s);
  if (envelope == 0.0) return 0.0;
  const double lt = poly(s);
  const double dlt = poly_derivative(s);
  const double w = c0_ * s + c1_;
  const double bracket = c0_ * s * lt * lt + w * ((2.0 * q_ - 1.0 - s) * lt * lt + 2.0 * s * lt * dlt);
  return std::pow(s, 2.0 * q_ - 2.0) * envelope * bracket;
}

double RadialProfile::log_value(double s) const {
  const double lt = poly(s);
  if (lt == 0.0) return -std::numeric_limits<double>::infinity();
  const double p = c1_ > 0.0 ? c0_ + c1_ / s : c0_;
  return std::log(p) + 2.0 * q_ * std::log(s) - s + 2.0 * std::log(std::abs(lt));
}

double RadialProfile::origin_exponent() const noexcept {
  return c1_ > 0.0 ? 2.0 * q_ - 1.0 : 2.0 * q_;
}

ProbabilityDensity::ProbabilityDensity(DensityModel model, QuantumNumbers qn, CoulombSystem system,
                                       RadialProfile profile, double scale, bool normalized)
    : model_(model),
      qn_(qn),
      system_(system),
      profile_(std::move(profile)),
      scale_(scale),
      normalized_(normalized) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("ProbabilityDensity: scale must be positive");
  }
}

double ProbabilityDensity::radial(double r) const {
  return scale_ * scale_ * scale_ * profile_(scale_ * r);
}

double ProbabilityDensity::radial_derivative(double r) const {
  return scale_ * scale_ * scale_ * scale_ * profile_.derivative(scale_ * r);
}

double ProbabilityDensity::angular(double theta) const {
  return sph_harmonic_sq(qn_.l(), qn_.m(), theta);
}

}  // namespace kgc
