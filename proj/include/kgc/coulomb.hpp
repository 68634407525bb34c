#pragma once

#include <string>

namespace kgc {

/// Labels (n, l, m) of a stationary Coulomb state: n >= 1, 0 <= l < n,
/// |m| <= l. Checked at construction.
class QuantumNumbers {
 public:
  QuantumNumbers(int n, int l, int m);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  /// Radial node count n - l - 1, the Laguerre degree.
  int radial_degree() const noexcept { return n_ - l_ - 1; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  int n_;
  int l_;
  int m_;
};

std::string to_string(const QuantumNumbers& qn);

/// Default pion rest mass in electron masses.
inline constexpr double kPionMassElectronMasses = 273.13;
/// Default fine-structure constant.
inline constexpr double kFineStructure = 1.0 / 137.035999;

/// A single spinless particle of rest energy mass_c2 bound by a point nucleus
/// of charge Z (infinite nuclear mass). Energies and lengths are in whatever
/// unit system mass_c2 and hbar_c are expressed in.
struct CoulombSystem {
  double Z = 1.0;
  double mass_c2 = 1.0;
  double alpha_fs = kFineStructure;
  double hbar_c = 1.0;

  /// Coupling gamma = Z * alpha.
  double gamma() const noexcept { return Z * alpha_fs; }
  /// Reduced Compton wavelength hbar / (m0 c), in the system's length unit.
  double compton_length() const noexcept { return hbar_c / mass_c2; }

  /// Throws DomainError unless every field is finite and strictly positive.
  void validate() const;

  /// Natural units: hbar = c = 1 and energies in units of m0 c^2.
  static CoulombSystem natural(double Z, double alpha_fs = kFineStructure);

  /// Atomic units (hbar = e = m_e = 1, c = 1/alpha) for a particle of the
  /// given mass in electron masses; lengths in bohr, energies in hartree.
  static CoulombSystem atomic_units(double Z, double mass_electron_masses = kPionMassElectronMasses,
                                    double alpha_fs = kFineStructure);
};

}  // namespace kgc
