#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kgc/coulomb.hpp"
#include "kgc/infomeasures.hpp"
#include "kgc/report.hpp"

namespace kgc {

enum class Measure { S, I, J, diseq, C_FS, C_LMC, zeta };

const char* to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view text);
std::set<Measure> all_measures();

enum class OutputFormat { csv, json };

/// A grid of states to evaluate: every model x Z x state combination.
struct ScanSpec {
  std::vector<Model> models{Model::kg, Model::sch};
  std::vector<double> Z{1.0};
  std::vector<QuantumNumbers> states{QuantumNumbers(1, 0, 0)};
  std::set<Measure> measures = all_measures();
  double mass_electron_masses = kPionMassElectronMasses;
  double alpha_fs = kFineStructure;
  MeasureOptions options{};
  OutputFormat format = OutputFormat::csv;
  /// Worker threads; 0 picks the hardware concurrency.
  int threads = 0;

  /// Throws DomainError on an empty or inconsistent spec.
  void validate() const;
};

/// Cartesian product of n, l, m lists. Throws DomainError naming the first
/// invalid (n, l, m) combination.
std::vector<QuantumNumbers> state_grid(const std::vector<int>& n, const std::vector<int>& l,
                                       const std::vector<int>& m);

/// One output row: a (model, Z, n, l, m) point. A failed state carries an
/// error record and no numbers.
struct ScanRow {
  Model model = Model::kg;
  double Z = 0.0;
  int n = 1;
  int l = 0;
  int m = 0;
  std::optional<double> epsilon_over_mc2;
  std::optional<double> S;
  std::optional<double> I;
  std::optional<double> J;
  std::optional<double> disequilibrium;
  std::optional<double> C_FS;
  std::optional<double> C_LMC;
  std::optional<double> zeta_FS;
  std::string error;
  /// Not part of the CSV schema; carried in JSON.
  bool regularized = false;

  bool ok() const noexcept { return error.empty(); }
};

/// Evaluates the grid. Rows come out in spec order (Z, then state, then
/// model) whatever the thread count.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

/// Fixed CSV header: model,Z,n,l,m,epsilon_over_mc2,S,I,J,disequilibrium,
/// C_FS,C_LMC,zeta_FS,error.
std::string_view csv_header();
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);
void write_json(std::ostream& os, const std::vector<ScanRow>& rows);
std::vector<ScanRow> read_csv(std::istream& is);

/// Named presets reproducing the figure grids: "fig1", "fig2", "fig3".
std::optional<ScanSpec> preset(std::string_view name);

/// True when any row carries an error.
bool any_failed(const std::vector<ScanRow>& rows);

}  // namespace kgc
