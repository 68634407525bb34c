#include "kgc/coulomb.hpp"

#include <cmath>
#include <cstdlib>

#include "kgc/errors.hpp"

namespace kgc {

QuantumNumbers::QuantumNumbers(int n, int l, int m) : n_(n), l_(l), m_(m) {
  if (n < 1 || l < 0 || l > n - 1 || std::abs(m) > l) {
    throw DomainError("invalid quantum numbers " + to_string(*this) +
                      ": need n >= 1, 0 <= l <= n-1, |m| <= l");
  }
}

std::string to_string(const QuantumNumbers& qn) {
  return "(n=" + std::to_string(qn.n()) + ", l=" + std::to_string(qn.l()) +
         ", m=" + std::to_string(qn.m()) + ")";
}

void CoulombSystem::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(Z)) throw DomainError("CoulombSystem: Z must be positive");
  if (!positive(mass_c2)) throw DomainError("CoulombSystem: mass_c2 must be positive");
  if (!positive(alpha_fs)) throw DomainError("CoulombSystem: alpha_fs must be positive");
  if (!positive(hbar_c)) throw DomainError("CoulombSystem: hbar_c must be positive");
}

CoulombSystem CoulombSystem::natural(double Z, double alpha_fs) {
  CoulombSystem s{Z, 1.0, alpha_fs, 1.0};
  s.validate();
  return s;
}

CoulombSystem CoulombSystem::atomic_units(double Z, double mass_electron_masses, double alpha_fs) {
  const double c = 1.0 / alpha_fs;
  CoulombSystem s{Z, mass_electron_masses * c * c, alpha_fs, c};
  s.validate();
  return s;
}

}  // namespace kgc
