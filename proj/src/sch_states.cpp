#include "kgc/sch_states.hpp"

namespace kgc {

double SchBoundState::energy() const noexcept {
  const double gamma = system.gamma();
  return -system.mass_c2 * gamma * gamma / (2.0 * qn.n() * qn.n());
}

SchBoundState sch_state(const QuantumNumbers& qn, const CoulombSystem& system) {
  system.validate();
  return {qn, system, system.hbar_c / (system.mass_c2 * system.gamma())};
}

ProbabilityDensity sch_density(const QuantumNumbers& qn, const CoulombSystem& system) {
  const SchBoundState state = sch_state(qn, system);
  const int n = qn.n();
  const int l = qn.l();
  // With the orthonormal Laguerre polynomial, (n-l-1)!/(n+l)! [L]^2 = [Lt]^2,
  // leaving rho(x) = x^{2l} e^{-x} Lt^2 / (2n).
  RadialProfile profile(1.0 / (2.0 * n), 0.0, l, LaguerreParams(qn.radial_degree(), 2.0 * l + 1.0));
  return ProbabilityDensity(DensityModel::sch, qn, system, profile, 2.0 / (n * state.length_scale),
                            true);
}

}  // namespace kgc
