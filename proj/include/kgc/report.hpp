#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kgc/coulomb.hpp"
#include "kgc/infomeasures.hpp"

namespace kgc {

/// KG is the Klein-Gordon Lorentz-invariant density; SCH the Schroedinger one.
enum class Model { kg, sch };

const char* to_string(Model model);
std::optional<Model> parse_model(std::string_view text);

/// Builds the state for `model` and evaluates every measure of its density.
/// Supercritical charges (KG only) raise SupercriticalChargeError.
InfoReport run_report(const QuantumNumbers& qn, const CoulombSystem& system, Model model,
                      const MeasureOptions& options = {});

/// Total energy over rest energy: eps/m0c^2 for KG, 1 - gamma^2/(2n^2) for SCH.
double epsilon_over_mc2(const QuantumNumbers& qn, const CoulombSystem& system, Model model);

}  // namespace kgc
