// kgc: information measures of Klein-Gordon and Schroedinger Coulomb states.
//
//   kgc report --model both --Z 55 --n 1 --l 0 --m 0
//   kgc scan --Z-range 1:68:1 --n 1:6 --l all --m 0 --out scan.csv --svg scan.svg
//   kgc preset fig2 --format json
//
// Every option may also be given in a flat key=value file passed with
// --config; command-line flags win over the file.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgc/errors.hpp"
#include "kgc/scan.hpp"
#include "kgc/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitFailure = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw kgc::DomainError(what + ": not a number: '" + text + "'");
  return v;
}

int to_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw kgc::DomainError(what + ": not an integer: '" + text + "'");
  return v;
}

// "3", "1,2,5" or "1:6" (inclusive).
std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    const auto colon = item.find(':', 1);
    if (colon == std::string::npos) {
      out.push_back(to_int(item, what));
      continue;
    }
    const int lo = to_int(item.substr(0, colon), what);
    const int hi = to_int(item.substr(colon + 1), what);
    if (hi < lo) throw kgc::DomainError(what + ": empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw kgc::DomainError(what + ": empty list");
  return out;
}

std::vector<double> parse_z_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) throw kgc::DomainError("--Z-range: expected min:max:step, got '" + text + "'");
  const double lo = to_double(parts[0], "--Z-range");
  const double hi = to_double(parts[1], "--Z-range");
  const double step = to_double(parts[2], "--Z-range");
  if (!(step > 0.0)) throw kgc::DomainError("--Z-range: step must be positive");
  if (!(hi >= lo)) throw kgc::DomainError("--Z-range: max must be >= min");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double z = lo + static_cast<double>(i) * step;
    if (z > hi + 1e-9 * step) break;
    out.push_back(z);
  }
  return out;
}

// "all" expands l to 0..n-1 and m to -l..l; explicit lists are checked.
std::vector<kgc::QuantumNumbers> build_states(const std::string& n_text, const std::string& l_text,
                                              const std::string& m_text) {
  const std::vector<int> ns = parse_int_list(n_text, "--n");
  const bool all_l = l_text == "all";
  const bool all_m = m_text == "all";
  const std::vector<int> ls = all_l ? std::vector<int>{} : parse_int_list(l_text, "--l");
  const std::vector<int> ms = all_m ? std::vector<int>{} : parse_int_list(m_text, "--m");
  std::vector<kgc::QuantumNumbers> out;
  for (int n : ns) {
    std::vector<int> l_values = ls;
    if (all_l) {
      for (int l = 0; l < n; ++l) l_values.push_back(l);
    }
    for (int l : l_values) {
      std::vector<int> m_values = ms;
      if (all_m) {
        for (int m = -l; m <= l; ++m) m_values.push_back(m);
      }
      for (int m : m_values) out.emplace_back(n, l, m);
    }
  }
  return out;
}

struct Settings {
  std::string model = "both";
  std::vector<std::string> Z;
  std::string Z_range;
  std::string n = "1";
  std::string l = "0";
  std::string m = "0";
  std::string measures;
  double mass = kgc::kPionMassElectronMasses;
  double alpha = kgc::kFineStructure;
  double tol = 1e-10;
  double cutoff = kgc::kDefaultOriginCutoff;
  int threads = 0;
  std::string format = "csv";
  std::string out;
  std::string svg;
  std::string preset_name;
};

void apply_common(const Settings& s, kgc::ScanSpec& spec) {
  spec.mass_electron_masses = s.mass;
  spec.alpha_fs = s.alpha;
  spec.options.quadrature.rel_tol = s.tol;
  spec.options.origin_cutoff = s.cutoff;
  spec.threads = s.threads;
  spec.format = s.format == "json" ? kgc::OutputFormat::json : kgc::OutputFormat::csv;
}

void apply_grid(const Settings& s, kgc::ScanSpec& spec) {
  if (s.model == "both") {
    spec.models = {kgc::Model::kg, kgc::Model::sch};
  } else {
    spec.models = {*kgc::parse_model(s.model)};
  }
  if (!s.Z_range.empty()) {
    spec.Z = parse_z_range(s.Z_range);
  } else if (!s.Z.empty()) {
    spec.Z.clear();
    for (const std::string& z : s.Z) spec.Z.push_back(to_double(z, "--Z"));
  }
  spec.states = build_states(s.n, s.l, s.m);
  if (!s.measures.empty()) {
    spec.measures.clear();
    for (const std::string& name : split(s.measures, ',')) {
      const auto measure = kgc::parse_measure(name);
      if (!measure) throw kgc::DomainError("--measures: unknown measure '" + name + "'");
      spec.measures.insert(*measure);
    }
  } else if (spec.models.size() < 2) {
    spec.measures.erase(kgc::Measure::zeta);
  }
}

void emit(const Settings& s, const kgc::ScanSpec& spec, const std::vector<kgc::ScanRow>& rows,
          const std::string& title) {
  auto write = [&](std::ostream& os) {
    if (spec.format == kgc::OutputFormat::json) {
      kgc::write_json(os, rows);
    } else {
      kgc::write_csv(os, rows);
    }
  };
  if (s.out.empty()) {
    write(std::cout);
  } else {
    std::ofstream file(s.out);
    if (!file) throw std::runtime_error("cannot open output file " + s.out);
    write(file);
    if (!file) throw std::runtime_error("write failed: " + s.out);
  }
  if (!s.svg.empty()) {
    std::ofstream file(s.svg);
    if (!file) throw std::runtime_error("cannot open svg file " + s.svg);
    kgc::write_svg(file, kgc::plot_scan(rows, title));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fisher-Shannon and LMC complexities of Klein-Gordon and Schroedinger Coulomb states"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file with option defaults");

  Settings s;
  app.add_option("--model", s.model, "kg, sch or both")
      ->check(CLI::IsMember({"kg", "sch", "both"}))
      ->capture_default_str();
  auto* z_opt = app.add_option("--Z", s.Z, "Nuclear charge(s), comma separated")->delimiter(',');
  app.add_option("--Z-range", s.Z_range, "Charges min:max:step (inclusive)")->excludes(z_opt);
  app.add_option("--n", s.n, "Principal quantum numbers: 3, 1,2,5 or 1:6")->capture_default_str();
  app.add_option("--l", s.l, "Orbital quantum numbers, or 'all' for 0..n-1")->capture_default_str();
  app.add_option("--m", s.m, "Magnetic quantum numbers, or 'all' for -l..l")->capture_default_str();
  app.add_option("--measures", s.measures, "Subset of S,I,J,diseq,C_FS,C_LMC,zeta (default all)");
  app.add_option("--mass", s.mass, "Particle mass in electron masses")->capture_default_str();
  app.add_option("--alpha", s.alpha, "Fine-structure constant")->capture_default_str();
  app.add_option("--tol", s.tol, "Relative quadrature tolerance")->capture_default_str();
  app.add_option("--cutoff", s.cutoff,
                 "Inner radius for integrals divergent at r=0, in hbar/(m0 c); 0 = exact")
      ->capture_default_str();
  app.add_option("--threads", s.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", s.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", s.out, "Output file (default stdout)");
  app.add_option("--svg", s.svg, "Also write an SVG plot to this file");
  app.fallthrough();

  auto* report = app.add_subcommand("report", "Single state");
  auto* scan = app.add_subcommand("scan", "Grid over Z, n, l, m");
  auto* preset = app.add_subcommand("preset", "Figure grids: fig1, fig2, fig3");
  preset->add_option("name", s.preset_name, "Preset name")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  for (auto* sub : {report, scan, preset}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    kgc::ScanSpec spec;
    std::string title;
    if (preset->parsed()) {
      spec = *kgc::preset(s.preset_name);
      title = s.preset_name;
    } else {
      apply_grid(s, spec);
      if (report->parsed() && (spec.Z.size() != 1 || spec.states.size() != 1)) {
        throw kgc::DomainError("report: expects a single Z and a single (n, l, m)");
      }
      title = report->parsed() ? "report" : "scan";
    }
    apply_common(s, spec);
    spec.validate();
    const std::vector<kgc::ScanRow> rows = kgc::run_scan(spec);
    emit(s, spec, rows, title);
    if (kgc::any_failed(rows)) {
      for (const kgc::ScanRow& r : rows) {
        if (!r.ok()) {
          std::cerr << "kgc: " << to_string(r.model) << " Z=" << r.Z << " (" << r.n << ',' << r.l
                    << ',' << r.m << "): " << r.error << '\n';
        }
      }
      return kExitFailure;
    }
    return kExitOk;
  } catch (const kgc::Error& e) {
    std::cerr << "kgc: " << e.kind() << ": " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "kgc: " << e.what() << '\n';
    return kExitValidation;
  }
}
