#include "kgc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kgc/errors.hpp"

namespace kgc {

namespace {

constexpr std::string_view kHeader =
    "model,Z,n,l,m,epsilon_over_mc2,S,I,J,disequilibrium,C_FS,C_LMC,zeta_FS,error";

std::string format_number(const std::optional<double>& v) {
  if (!v) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::optional<double> parse_number(const std::string& text, const char* column) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw DomainError(std::string("read_csv: bad number in column ") + column + ": " + text);
  }
  return v;
}

int parse_int(const std::string& text, const char* column) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError(std::string("read_csv: bad integer in column ") + column + ": " + text);
  }
  return v;
}

// Both model rows of one (Z, state) point.
struct PointResult {
  std::vector<ScanRow> rows;
};

ScanRow evaluate(const ScanSpec& spec, Model model, double Z, const QuantumNumbers& qn,
                 std::optional<InfoReport>& report) {
  ScanRow row;
  row.model = model;
  row.Z = Z;
  row.n = qn.n();
  row.l = qn.l();
  row.m = qn.m();
  try {
    const CoulombSystem system =
        CoulombSystem::atomic_units(Z, spec.mass_electron_masses, spec.alpha_fs);
    const double eps = epsilon_over_mc2(qn, system, model);
    report = run_report(qn, system, model, spec.options);
    const auto pick = [&](Measure m, double v) -> std::optional<double> {
      return spec.measures.contains(m) ? std::optional<double>(v) : std::nullopt;
    };
    row.epsilon_over_mc2 = eps;
    row.S = pick(Measure::S, report->shannon_S);
    row.I = pick(Measure::I, report->fisher_I);
    row.J = pick(Measure::J, report->entropic_power_J);
    row.disequilibrium = pick(Measure::diseq, report->disequilibrium);
    row.C_FS = pick(Measure::C_FS, report->c_fs);
    row.C_LMC = pick(Measure::C_LMC, report->c_lmc);
    row.regularized = report->regularized;
  } catch (const Error& e) {
    report.reset();
    row.error = std::string(e.kind()) + ": " + e.what();
  }
  return row;
}

PointResult evaluate_point(const ScanSpec& spec, double Z, const QuantumNumbers& qn) {
  PointResult out;
  std::optional<InfoReport> kg;
  std::optional<InfoReport> sch;
  for (Model model : spec.models) {
    out.rows.push_back(evaluate(spec, model, Z, qn, model == Model::kg ? kg : sch));
  }
  if (spec.measures.contains(Measure::zeta) && kg && sch) {
    const double zeta = zeta_fs(sch->c_fs, kg->c_fs);
    for (ScanRow& row : out.rows) row.zeta_FS = zeta;
  }
  return out;
}

}  // namespace

const char* to_string(Measure m) {
  switch (m) {
    case Measure::S: return "S";
    case Measure::I: return "I";
    case Measure::J: return "J";
    case Measure::diseq: return "diseq";
    case Measure::C_FS: return "C_FS";
    case Measure::C_LMC: return "C_LMC";
    case Measure::zeta: return "zeta";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view text) {
  for (Measure m : all_measures()) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::set<Measure> all_measures() {
  return {Measure::S, Measure::I, Measure::J, Measure::diseq,
          Measure::C_FS, Measure::C_LMC, Measure::zeta};
}

void ScanSpec::validate() const {
  if (models.empty()) throw DomainError("scan: at least one model is required");
  if (Z.empty()) throw DomainError("scan: the Z list is empty");
  if (states.empty()) throw DomainError("scan: the state list is empty");
  for (double z : Z) {
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("scan: Z values must be positive");
  }
  if (measures.contains(Measure::zeta) &&
      !(std::ranges::count(models, Model::kg) && std::ranges::count(models, Model::sch))) {
    throw DomainError("scan: zeta requires both the kg and sch models");
  }
  if (!(mass_electron_masses > 0.0)) throw DomainError("scan: mass must be positive");
  if (!(alpha_fs > 0.0)) throw DomainError("scan: alpha must be positive");
  if (!(options.origin_cutoff >= 0.0)) throw DomainError("scan: cutoff must be >= 0");
  options.quadrature.validate();
}

std::vector<QuantumNumbers> state_grid(const std::vector<int>& n, const std::vector<int>& l,
                                       const std::vector<int>& m) {
  std::vector<QuantumNumbers> out;
  for (int nn : n) {
    for (int ll : l) {
      for (int mm : m) out.emplace_back(nn, ll, mm);
    }
  }
  return out;
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  spec.validate();
  struct Point {
    double Z;
    QuantumNumbers qn;
  };
  std::vector<Point> points;
  for (double z : spec.Z) {
    for (const QuantumNumbers& qn : spec.states) points.push_back({z, qn});
  }

  std::vector<PointResult> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      results[i] = evaluate_point(spec, points[i].Z, points[i].qn);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_threads =
      std::min<std::size_t>(spec.threads > 0 ? spec.threads : hw, points.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  std::vector<ScanRow> rows;
  for (PointResult& r : results) {
    for (ScanRow& row : r.rows) rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view csv_header() { return kHeader; }

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << kHeader << '\n';
  for (const ScanRow& r : rows) {
    os << to_string(r.model) << ',' << format_number(r.Z) << ',' << r.n << ',' << r.l << ','
       << r.m << ',' << format_number(r.epsilon_over_mc2) << ',' << format_number(r.S) << ','
       << format_number(r.I) << ',' << format_number(r.J) << ','
       << format_number(r.disequilibrium) << ',' << format_number(r.C_FS) << ','
       << format_number(r.C_LMC) << ',' << format_number(r.zeta_FS) << ','
       << quote_csv(r.error) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<ScanRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  for (const ScanRow& r : rows) {
    out.push_back({{"model", to_string(r.model)},
                   {"Z", r.Z},
                   {"n", r.n},
                   {"l", r.l},
                   {"m", r.m},
                   {"epsilon_over_mc2", opt(r.epsilon_over_mc2)},
                   {"S", opt(r.S)},
                   {"I", opt(r.I)},
                   {"J", opt(r.J)},
                   {"disequilibrium", opt(r.disequilibrium)},
                   {"C_FS", opt(r.C_FS)},
                   {"C_LMC", opt(r.C_LMC)},
                   {"zeta_FS", opt(r.zeta_FS)},
                   {"regularized", r.regularized},
                   {"error", r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error)}});
  }
  os << out.dump(2) << '\n';
}

std::vector<ScanRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader) {
    throw DomainError("read_csv: missing or unexpected header");
  }
  std::vector<ScanRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 14) {
      throw DomainError("read_csv: expected 14 fields, got " + std::to_string(f.size()));
    }
    ScanRow r;
    const auto model = parse_model(f[0]);
    if (!model) throw DomainError("read_csv: unknown model " + f[0]);
    r.model = *model;
    r.Z = parse_number(f[1], "Z").value_or(0.0);
    r.n = parse_int(f[2], "n");
    r.l = parse_int(f[3], "l");
    r.m = parse_int(f[4], "m");
    r.epsilon_over_mc2 = parse_number(f[5], "epsilon_over_mc2");
    r.S = parse_number(f[6], "S");
    r.I = parse_number(f[7], "I");
    r.J = parse_number(f[8], "J");
    r.disequilibrium = parse_number(f[9], "disequilibrium");
    r.C_FS = parse_number(f[10], "C_FS");
    r.C_LMC = parse_number(f[11], "C_LMC");
    r.zeta_FS = parse_number(f[12], "zeta_FS");
    r.error = f[13];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::optional<ScanSpec> preset(std::string_view name) {
  ScanSpec spec;
  if (name == "fig1") {
    // Ground state over the whole subcritical range of S states.
    spec.Z.clear();
    for (int z = 1; z <= 68; ++z) spec.Z.push_back(z);
    spec.states = {QuantumNumbers(1, 0, 0)};
    return spec;
  }
  if (name == "fig2") {
    spec.Z = {10, 19, 37, 55};
    spec.states = state_grid({1, 2, 3, 4, 5, 6}, {0}, {0});
    return spec;
  }
  if (name == "fig3") {
    spec.Z = {19, 55};
    spec.states.clear();
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) spec.states.emplace_back(n, l, 0);
    }
    return spec;
  }
  return std::nullopt;
}

bool any_failed(const std::vector<ScanRow>& rows) {
  return std::ranges::any_of(rows, [](const ScanRow& r) { return !r.ok(); });
}

}  // namespace kgc
