#include "kgc/kg_states.hpp"

#include <cmath>
#include <string>

#include "kgc/errors.hpp"

namespace kgc {

double effective_l(int l, double gamma) {
  if (l < 0) throw DomainError("effective_l: l must be >= 0");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("effective_l: gamma must be positive and finite");
  }
  const double lh = l + 0.5;
  if (gamma >= lh) {
    throw SupercriticalChargeError("supercritical coupling gamma=" + std::to_string(gamma) +
                                   " >= l+1/2=" + std::to_string(lh) +
                                   ": no bound state with l=" + std::to_string(l));
  }
  // l - gamma^2 / (sqrt((l+1/2)^2 - gamma^2) + l + 1/2), free of cancellation
  // as gamma -> 0.
  const double root = std::sqrt((lh - gamma) * (lh + gamma));
  return l - gamma * gamma / (root + lh);
}

namespace {

// gamma / (n - l + l'), the ratio entering the energy formula.
double coupling_ratio(const QuantumNumbers& qn, const CoulombSystem& system, double l_eff) {
  return system.gamma() / (qn.n() - qn.l() + l_eff);
}

}  // namespace

double kg_energy(const QuantumNumbers& qn, const CoulombSystem& system) {
  system.validate();
  const double l_eff = effective_l(qn.l(), system.gamma());
  const double ratio = coupling_ratio(qn, system, l_eff);
  return system.mass_c2 / std::sqrt(1.0 + ratio * ratio);
}

KGBoundState kg_state(const QuantumNumbers& qn, const CoulombSystem& system) {
  system.validate();
  const double gamma = system.gamma();
  const double l_eff = effective_l(qn.l(), gamma);
  const double n_eff = qn.n() - qn.l() + l_eff;
  const double ratio = coupling_ratio(qn, system, l_eff);
  const double root = std::sqrt(1.0 + ratio * ratio);

  const double energy = system.mass_c2 / root;
  // sqrt(m0^2c^4 - eps^2) = m0c^2 * ratio / root, without cancellation.
  const double beta = 2.0 * system.mass_c2 * ratio / (root * system.hbar_c);
  const double lambda = 2.0 * energy * gamma / (system.hbar_c * beta);
  const double norm_sq = system.mass_c2 * gamma / system.hbar_c / (n_eff * n_eff + gamma * gamma);

  return {qn, system, l_eff, energy, beta, lambda, std::sqrt(norm_sq)};
}

namespace {

LaguerreParams radial_laguerre(const KGBoundState& state) {
  return LaguerreParams(state.qn.radial_degree(), 2.0 * state.l_eff + 1.0);
}

}  // namespace

double radial_u(const KGBoundState& state, double s) {
  if (s <= 0.0) return 0.0;
  return state.norm * std::pow(s, state.l_eff + 1.0) * std::exp(-0.5 * s) *
         laguerre_orthonormal(radial_laguerre(state), s);
}

ProbabilityDensity density_li(const KGBoundState& state) {
  const CoulombSystem& sys = state.system;
  const double norm_sq = state.norm * state.norm;
  // D(r) = beta^3 rho(beta r) with
  // rho(s) = norm^2/(beta m0c^2) * (eps + gamma hbar c beta / s) * s^(2l') e^{-s} Lt^2.
  const double c0 = norm_sq * state.energy / (state.beta * sys.mass_c2);
  const double c1 = norm_sq * sys.gamma() * sys.hbar_c / sys.mass_c2;
  return ProbabilityDensity(DensityModel::kg_li, state.qn, sys,
                            RadialProfile(c0, c1, state.l_eff, radial_laguerre(state)), state.beta,
                            true);
}

ProbabilityDensity density_nli(const KGBoundState& state) {
  const double c0 = state.norm * state.norm / state.beta;
  return ProbabilityDensity(DensityModel::kg_nli, state.qn, state.system,
                            RadialProfile(c0, 0.0, state.l_eff, radial_laguerre(state)),
                            state.beta, false);
}

}  // namespace kgc
