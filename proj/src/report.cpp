#include "kgc/report.hpp"

#include "kgc/kg_states.hpp"
#include "kgc/sch_states.hpp"

namespace kgc {

const char* to_string(Model model) { return model == Model::kg ? "KG" : "SCH"; }

std::optional<Model> parse_model(std::string_view text) {
  if (text == "kg" || text == "KG") return Model::kg;
  if (text == "sch" || text == "SCH") return Model::sch;
  return std::nullopt;
}

InfoReport run_report(const QuantumNumbers& qn, const CoulombSystem& system, Model model,
                      const MeasureOptions& options) {
  if (model == Model::kg) return info_report(density_li(kg_state(qn, system)), options);
  return info_report(sch_density(qn, system), options);
}

double epsilon_over_mc2(const QuantumNumbers& qn, const CoulombSystem& system, Model model) {
  if (model == Model::kg) return kg_energy(qn, system) / system.mass_c2;
  return 1.0 + sch_state(qn, system).energy() / system.mass_c2;
}

}  // namespace kgc
