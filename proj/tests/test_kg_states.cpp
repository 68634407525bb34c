#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "kgc/errors.hpp"
#include "kgc/infomeasures.hpp"
#include "kgc/kg_states.hpp"
#include "kgc/sch_states.hpp"

using namespace kgc;

namespace {

// Natural units with the coupling gamma set directly.
CoulombSystem with_gamma(double gamma) { return CoulombSystem::natural(1.0, gamma); }

}  // namespace

TEST_CASE("effective l") {
  CHECK(std::abs(effective_l(0, 1e-9)) < 1e-17);
  CHECK(effective_l(0, 0.3) == doctest::Approx(-0.1).epsilon(1e-14));
  CHECK(effective_l(2, 0.3) == doctest::Approx(std::sqrt(6.25 - 0.09) - 0.5).epsilon(1e-14));
  CHECK_THROWS_AS(effective_l(0, 0.6), SupercriticalChargeError);
  CHECK_THROWS_AS(effective_l(0, 0.5), SupercriticalChargeError);
  CHECK_THROWS_AS(effective_l(1, 1.5), SupercriticalChargeError);
  CHECK_THROWS_AS(effective_l(0, 0.0), DomainError);
  CHECK_THROWS_AS(effective_l(0, -0.1), DomainError);
  // Tiny couplings keep full relative accuracy in l - l'.
  CHECK((0.0 - effective_l(0, 1e-6)) == doctest::Approx(1e-12).epsilon(1e-10));
}

TEST_CASE("energy of the (1,0) state at gamma = 0.4") {
  const KGBoundState st = kg_state(QuantumNumbers(1, 0, 0), with_gamma(0.4));
  CHECK(st.l_eff == doctest::Approx(-0.2).epsilon(1e-14));
  CHECK(st.effective_n() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(st.energy == doctest::Approx(0.8944272).epsilon(1e-7));
  CHECK(st.energy == doctest::Approx(1.0 / std::sqrt(1.25)).epsilon(1e-15));
  CHECK(st.beta == doctest::Approx(2.0 * 0.4472136).epsilon(1e-7));
}

TEST_CASE("small-coupling limits") {
  const double gamma = 1e-3;
  for (int n = 1; n <= 3; ++n) {
    const KGBoundState st = kg_state(QuantumNumbers(n, 0, 0), with_gamma(gamma));
    const double binding = st.energy - 1.0;
    const double sch = -gamma * gamma / (2.0 * n * n);
    CHECK(std::abs(binding / sch - 1.0) < 1e-5);
    // Schroedinger inverse length 2 gamma m0c^2 / (hbar c n).
    CHECK(std::abs(st.beta / (2.0 * gamma / n) - 1.0) < 1e-5);
  }
  CHECK(kg_energy(QuantumNumbers(1, 0, 0), with_gamma(1e-9)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("lambda equals n - l + l'") {
  for (const auto& [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {5, 3}}) {
    const KGBoundState st = kg_state(QuantumNumbers(n, l, 0), with_gamma(0.35));
    CHECK(std::abs(st.lambda - (n - l + st.l_eff)) <= 1e-12 * st.lambda);
  }
  int count = 0;
  for (double Z : {1.0, 7.0, 19.0, 30.0, 37.0, 47.0, 55.0, 60.0, 65.0, 68.0}) {
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 0}, {4, 2}, {6, 5}}) {
      const KGBoundState st = kg_state(QuantumNumbers(n, l, 0), CoulombSystem::atomic_units(Z));
      CHECK(std::abs(st.lambda - st.effective_n()) <= 1e-12 * st.lambda);
      ++count;
    }
  }
  CHECK(count == 50);
}

TEST_CASE("state invariants and the normalization constant") {
  for (double gamma : {0.01, 0.2, 0.45}) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        const KGBoundState st = kg_state(QuantumNumbers(n, l, 0), with_gamma(gamma));
        CHECK(st.energy > 0.0);
        CHECK(st.energy < 1.0);
        CHECK(st.beta > 0.0);
        const double np = st.effective_n();
        CHECK(st.norm * st.norm == doctest::Approx(gamma / (np * np + gamma * gamma)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("supercritical boundary with the physical fine-structure constant") {
  CHECK_NOTHROW(kg_state(QuantumNumbers(1, 0, 0), CoulombSystem::atomic_units(68)));
  CHECK_THROWS_AS(kg_state(QuantumNumbers(1, 0, 0), CoulombSystem::atomic_units(69)),
                  SupercriticalChargeError);
  CHECK_THROWS_AS(kg_state(QuantumNumbers(3, 0, 0), CoulombSystem::atomic_units(100)),
                  SupercriticalChargeError);
  CHECK_NOTHROW(kg_state(QuantumNumbers(2, 1, 0), CoulombSystem::atomic_units(205)));
  CHECK_THROWS_AS(kg_state(QuantumNumbers(2, 1, 0), CoulombSystem::atomic_units(206)),
                  SupercriticalChargeError);
  for (int Z = 1; Z <= 80; ++Z) {
    const bool sub = Z * kFineStructure < 0.5;
    if (sub) {
      CHECK_NOTHROW(kg_state(QuantumNumbers(1, 0, 0), CoulombSystem::atomic_units(Z)));
    } else {
      CHECK_THROWS_AS(kg_state(QuantumNumbers(1, 0, 0), CoulombSystem::atomic_units(Z)),
                      SupercriticalChargeError);
    }
  }
}

TEST_CASE("energy increases with n - l + l'") {
  const CoulombSystem sys = CoulombSystem::atomic_units(55);
  std::vector<std::pair<double, double>> points;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) {
      const KGBoundState st = kg_state(QuantumNumbers(n, l, 0), sys);
      points.emplace_back(st.effective_n(), st.energy);
    }
  }
  std::ranges::sort(points);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].first > points[i - 1].first) CHECK(points[i].second > points[i - 1].second);
  }
  // Fine structure: l breaks the n degeneracy, higher l is less bound.
  CHECK(kg_energy(QuantumNumbers(2, 0, 0), sys) < kg_energy(QuantumNumbers(2, 1, 0), sys));
}

TEST_CASE("radial function") {
  const KGBoundState st = kg_state(QuantumNumbers(3, 0, 0), with_gamma(0.3));
  CHECK(radial_u(st, 0.0) == 0.0);
  int changes = 0;
  double prev = radial_u(st, 1e-3);
  for (double s = 2e-3; s < 60.0; s += 1e-3) {
    const double u = radial_u(st, s);
    if ((u > 0.0) != (prev > 0.0)) ++changes;
    prev = u;
  }
  CHECK(changes == 2);

  // Nonrelativistic 1s: u ~ s e^{-s/2}, maximal at s = 2.
  const KGBoundState g = kg_state(QuantumNumbers(1, 0, 0), with_gamma(1e-6));
  double best_s = 0.0;
  double best = 0.0;
  for (double s = 0.01; s < 10.0; s += 0.01) {
    const double u = std::abs(radial_u(g, s));
    if (u > best) {
      best = u;
      best_s = s;
    }
  }
  CHECK(best_s == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("Lorentz-invariant density integrates to one") {
  const CoulombSystem sys = CoulombSystem::atomic_units(20);
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l < n; ++l) {
      const ProbabilityDensity d = density_li(kg_state(QuantumNumbers(n, l, 0), sys));
      CHECK(d.normalized());
      CHECK(std::abs(total_probability(d) - 1.0) <= 1e-8);
    }
  }
  for (double Z : {5.0, 30.0, 55.0, 68.0}) {
    for (int n = 1; n <= 6; ++n) {
      for (int l = 0; l < n; ++l) {
        const ProbabilityDensity d =
            density_li(kg_state(QuantumNumbers(n, l, l / 2), CoulombSystem::atomic_units(Z)));
        CHECK(std::abs(total_probability(d) - 1.0) <= 1e-8);
      }
    }
  }
}

TEST_CASE("radial density is nonnegative") {
  const ProbabilityDensity d = density_li(kg_state(QuantumNumbers(4, 1, 0), with_gamma(0.4)));
  for (double r = 1e-6; r < 200.0; r *= 1.1) CHECK(d.radial(r) >= 0.0);
}

namespace {

// Largest relative deviation between the Klein-Gordon and Schroedinger radial
// densities over r in [0.5, 6n] Bohr-like radii, skipping the vicinity of
// nodes where the ratio is ill-conditioned.
double max_nonrelativistic_deviation(const QuantumNumbers& qn, double gamma) {
  const CoulombSystem sys = with_gamma(gamma);
  const ProbabilityDensity kg = density_li(kg_state(qn, sys));
  const ProbabilityDensity sch = sch_density(qn, sys);
  const double a = 1.0 / gamma;
  const Eigen::VectorXd nodes = sch.profile().nodes() / sch.scale();
  double worst = 0.0;
  for (double x = 0.5; x < 6.0 * qn.n(); x += 0.37) {
    const double r = x * a;
    bool near_node = false;
    for (int i = 0; i < nodes.size(); ++i) near_node |= std::abs(r - nodes[i]) < 0.05 * a;
    if (!near_node) worst = std::max(worst, std::abs(kg.radial(r) / sch.radial(r) - 1.0));
  }
  return worst;
}

}  // namespace

TEST_CASE("nonrelativistic limit of the density") {
  // The deviation is O(gamma^2) with a coefficient that grows with r and near
  // nodes, reaching about 2e-4 at gamma = 1e-3; at gamma = 1e-4 it is below
  // 1e-5 on the whole sampled range.
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l < n; ++l) {
      const QuantumNumbers qn(n, l, 0);
      const double coarse = max_nonrelativistic_deviation(qn, 1e-3);
      const double fine = max_nonrelativistic_deviation(qn, 1e-4);
      CHECK(fine < 1e-5);
      CHECK(coarse / fine == doctest::Approx(100.0).epsilon(0.05));
    }
  }
}

TEST_CASE("small-r power law of the Lorentz-invariant density") {
  // D ~ r^(2l'-1), so r^2 D ~ r^(2l'+1).
  for (double gamma : {0.1, 0.3, 0.45}) {
    for (int n : {1, 2}) {
      const KGBoundState st = kg_state(QuantumNumbers(n, 0, 0), with_gamma(gamma));
      const ProbabilityDensity d = density_li(st);
      const double r1 = 1e-8 / st.beta;
      const double r2 = 1e-6 / st.beta;
      const double slope = std::log(d.radial(r2) / d.radial(r1)) / std::log(r2 / r1);
      CHECK(std::abs(slope - (2.0 * st.l_eff - 1.0)) < 0.01);
      const double slope_r2 =
          std::log(r2 * r2 * d.radial(r2) / (r1 * r1 * d.radial(r1))) / std::log(r2 / r1);
      CHECK(std::abs(slope_r2 - (2.0 * st.l_eff + 1.0)) < 0.01);
      // |psi|^2 is one power less singular.
      const ProbabilityDensity nli = density_nli(st);
      const double slope_nli = std::log(nli.radial(r2) / nli.radial(r1)) / std::log(r2 / r1);
      CHECK(std::abs(slope_nli - 2.0 * st.l_eff) < 0.01);
    }
  }
}

TEST_CASE("non-invariant density") {
  const KGBoundState weak = kg_state(QuantumNumbers(1, 0, 0), CoulombSystem::atomic_units(1, 273.13, 1e-6));
  CHECK(std::abs(total_probability(density_nli(weak)) - 1.0) < 1e-9);

  const KGBoundState st = kg_state(QuantumNumbers(1, 0, 0), CoulombSystem::atomic_units(55));
  const ProbabilityDensity nli = density_nli(st);
  CHECK_FALSE(nli.normalized());
  const double total = total_probability(nli);
  CHECK(std::abs(total - 1.0) > 1e-3);
  CHECK(total == doctest::Approx(st.energy / st.system.mass_c2).epsilon(1e-10));

  const ProbabilityDensity li = density_li(st);
  const CoulombSystem& sys = st.system;
  for (double r : {1e-9, 1e-7, 1e-5, 1e-4, 5e-4}) {
    const double ratio = (st.energy + sys.gamma() * sys.hbar_c / r) / sys.mass_c2;
    CHECK(li.radial(r) / nli.radial(r) == doctest::Approx(ratio).epsilon(1e-13));
  }
}

TEST_CASE("density shape in s is independent of the mass") {
  const QuantumNumbers qn(3, 1, 0);
  const ProbabilityDensity light = density_li(kg_state(qn, CoulombSystem::atomic_units(40, 1.0)));
  const ProbabilityDensity heavy = density_li(kg_state(qn, CoulombSystem::atomic_units(40, 273.13)));
  CHECK(heavy.scale() / light.scale() == doctest::Approx(273.13).epsilon(1e-13));
  for (double s = 0.01; s < 40.0; s *= 1.3) {
    CHECK(std::abs(heavy.profile()(s) - light.profile()(s)) <= 1e-12 * std::abs(light.profile()(s)));
  }
}
