#pragma once

#include "kgc/coulomb.hpp"
#include "kgc/density.hpp"

namespace kgc {

/// l' = sqrt((l + 1/2)^2 - gamma^2) - 1/2. Throws SupercriticalChargeError
/// when gamma >= l + 1/2.
double effective_l(int l, double gamma);

/// Bound-state energy eps = m0c^2 / sqrt(1 + (gamma / (n - l + l'))^2).
double kg_energy(const QuantumNumbers& qn, const CoulombSystem& system);

/// A Klein-Gordon bound state in the point Coulomb potential.
///   l_eff   l', effective angular momentum
///   energy  eps, in the system's energy unit
///   beta    (2/hbar c) sqrt(m0^2c^4 - eps^2), inverse length; s = beta r
///   lambda  2 eps Z e^2 / (hbar^2 c^2 beta), equals n - l + l'
///   norm    radial normalization fixed by charge conservation,
///           norm^2 = (m0c^2 gamma / hbar c) / ((n + l' - l)^2 + gamma^2)
struct KGBoundState {
  QuantumNumbers qn;
  CoulombSystem system;
  double l_eff;
  double energy;
  double beta;
  double lambda;
  double norm;

  /// n - l + l', the effective principal quantum number.
  double effective_n() const noexcept { return qn.n() - qn.l() + l_eff; }
};

KGBoundState kg_state(const QuantumNumbers& qn, const CoulombSystem& system);

/// u_nl(s) = norm * s^(l'+1) e^(-s/2) Lt_{n-l-1}^{2l'+1}(s), orthonormal
/// Laguerre convention.
double radial_u(const KGBoundState& state, double s);

/// Lorentz-invariant charge density divided by the particle charge:
/// (eps - V(r)) / (m0c^2) * |psi|^2. Integrates to one.
ProbabilityDensity density_li(const KGBoundState& state);

/// |psi|^2 with the same normalization constant. Integrates to eps/(m0c^2),
/// not to one; marked non-normalized.
ProbabilityDensity density_nli(const KGBoundState& state);

}  // namespace kgc
