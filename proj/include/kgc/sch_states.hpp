#pragma once

#include "kgc/coulomb.hpp"
#include "kgc/density.hpp"

namespace kgc {

/// Nonrelativistic hydrogenic state of the same particle and nucleus.
/// length_scale a = hbar^2 / (m0 Z e^2) = hbar c / (m0c^2 gamma).
struct SchBoundState {
  QuantumNumbers qn;
  CoulombSystem system;
  double length_scale;

  /// Binding energy -m0c^2 gamma^2 / (2 n^2), in the system's energy unit.
  double energy() const noexcept;
};

SchBoundState sch_state(const QuantumNumbers& qn, const CoulombSystem& system);

/// D(r) = (2/(n a))^3 (n-l-1)!/(2n (n+l)!) e^{-x} x^{2l} [L_{n-l-1}^{2l+1}(x)]^2,
/// x = 2r/(n a), times |Y_lm|^2.
ProbabilityDensity sch_density(const QuantumNumbers& qn, const CoulombSystem& system);

}  // namespace kgc
