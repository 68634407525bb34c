#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "kgc/errors.hpp"
#include "kgc/scan.hpp"
#include "kgc/svg.hpp"

using namespace kgc;

namespace {

std::string csv_of(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

std::string json_of(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  write_json(os, rows);
  return os.str();
}

void check_same(const ScanRow& a, const ScanRow& b) {
  CHECK(a.model == b.model);
  CHECK(a.Z == b.Z);
  CHECK(a.n == b.n);
  CHECK(a.l == b.l);
  CHECK(a.m == b.m);
  CHECK(a.epsilon_over_mc2 == b.epsilon_over_mc2);
  CHECK(a.S == b.S);
  CHECK(a.I == b.I);
  CHECK(a.J == b.J);
  CHECK(a.disequilibrium == b.disequilibrium);
  CHECK(a.C_FS == b.C_FS);
  CHECK(a.C_LMC == b.C_LMC);
  CHECK(a.zeta_FS == b.zeta_FS);
  CHECK(a.error == b.error);
}

}  // namespace

TEST_CASE("fixed CSV header") {
  CHECK(csv_header() ==
        "model,Z,n,l,m,epsilon_over_mc2,S,I,J,disequilibrium,C_FS,C_LMC,zeta_FS,error");
  const std::string text = csv_of({});
  CHECK(text == std::string(csv_header()) + "\n");
}

TEST_CASE("presets") {
  CHECK_FALSE(preset("fig4").has_value());

  const auto fig1 = run_scan(*preset("fig1"));
  REQUIRE(fig1.size() == 136);
  CHECK_FALSE(any_failed(fig1));
  double previous = 0.0;
  for (std::size_t i = 0; i < fig1.size(); i += 2) {
    REQUIRE(fig1[i].model == Model::kg);
    REQUIRE(fig1[i + 1].model == Model::sch);
    CHECK(fig1[i].Z == static_cast<double>(i / 2 + 1));
    CHECK(*fig1[i].C_FS > previous);
    CHECK(*fig1[i].C_FS > *fig1[i + 1].C_FS);
    previous = *fig1[i].C_FS;
  }

  const auto fig2 = run_scan(*preset("fig2"));
  REQUIRE(fig2.size() == 4 * 6 * 2);
  for (std::size_t z = 0; z < 4; ++z) {
    for (std::size_t n = 1; n < 6; ++n) {
      const ScanRow& prev = fig2[z * 12 + 2 * (n - 1)];
      const ScanRow& cur = fig2[z * 12 + 2 * n];
      CHECK(cur.n == static_cast<int>(n + 1));
      CHECK(*cur.zeta_FS < *prev.zeta_FS);
    }
  }

  const auto fig3 = run_scan(*preset("fig3"));
  CHECK(fig3.size() == 2 * 15 * 2);
  CHECK_FALSE(any_failed(fig3));
}

TEST_CASE("measure selection and single-model rows") {
  ScanSpec spec;
  spec.models = {Model::kg};
  spec.Z = {30};
  spec.measures = {Measure::C_FS, Measure::S};
  const auto rows = run_scan(spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].S.has_value());
  CHECK(rows[0].C_FS.has_value());
  CHECK(rows[0].epsilon_over_mc2.has_value());
  CHECK_FALSE(rows[0].I.has_value());
  CHECK_FALSE(rows[0].J.has_value());
  CHECK_FALSE(rows[0].disequilibrium.has_value());
  CHECK_FALSE(rows[0].C_LMC.has_value());
  CHECK_FALSE(rows[0].zeta_FS.has_value());
}

TEST_CASE("failed states carry an error and no numbers") {
  ScanSpec spec;
  spec.Z = {68, 69};
  const auto rows = run_scan(spec);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].ok());
  CHECK(rows[1].ok());
  CHECK(rows[0].zeta_FS.has_value());
  const ScanRow& bad = rows[2];
  CHECK(bad.model == Model::kg);
  CHECK(bad.error.rfind("supercritical_charge: ", 0) == 0);
  CHECK_FALSE(bad.epsilon_over_mc2.has_value());
  CHECK_FALSE(bad.S.has_value());
  CHECK_FALSE(bad.C_FS.has_value());
  CHECK_FALSE(bad.zeta_FS.has_value());
  // The Schroedinger state at the same point is fine but has no partner.
  CHECK(rows[3].ok());
  CHECK_FALSE(rows[3].zeta_FS.has_value());
  CHECK(any_failed(rows));
}

TEST_CASE("CSV round trip") {
  ScanSpec spec;
  spec.Z = {1, 37.5, 69};
  spec.states = state_grid({2, 3}, {1}, {-1, 0});
  auto rows = run_scan(spec);
  rows.back().error = "quoted \"text\", with a comma";
  const std::string text = csv_of(rows);
  std::istringstream is(text);
  const auto back = read_csv(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) check_same(rows[i], back[i]);
  CHECK(csv_of(back) == text);
}

TEST_CASE("read_csv rejects malformed input") {
  std::istringstream bad_header("model,Z\nKG,1\n");
  CHECK_THROWS_AS(read_csv(bad_header), DomainError);
  std::istringstream short_row(std::string(csv_header()) + "\nKG,1,1,0\n");
  CHECK_THROWS_AS(read_csv(short_row), DomainError);
  std::istringstream bad_number(std::string(csv_header()) + "\nKG,x,1,0,0,,,,,,,,,\n");
  CHECK_THROWS_AS(read_csv(bad_number), DomainError);
  std::istringstream bad_model(std::string(csv_header()) + "\nDirac,1,1,0,0,,,,,,,,,\n");
  CHECK_THROWS_AS(read_csv(bad_model), DomainError);
}

TEST_CASE("output does not depend on the thread count") {
  ScanSpec spec = *preset("fig3");
  spec.threads = 1;
  const auto serial = run_scan(spec);
  spec.threads = 4;
  const auto parallel = run_scan(spec);
  spec.threads = 0;
  const auto automatic = run_scan(spec);
  CHECK(csv_of(serial) == csv_of(parallel));
  CHECK(csv_of(serial) == csv_of(automatic));
  CHECK(json_of(serial) == json_of(parallel));
}

TEST_CASE("JSON output") {
  ScanSpec spec;
  spec.Z = {55, 69};
  const auto rows = run_scan(spec);
  const auto doc = nlohmann::json::parse(json_of(rows));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 4);
  CHECK(doc[0]["model"] == "KG");
  CHECK(doc[0]["C_FS"].get<double>() == *rows[0].C_FS);
  CHECK(doc[0]["regularized"] == true);
  CHECK(doc[1]["regularized"] == false);
  CHECK(doc[0]["error"].is_null());
  CHECK(doc[2]["C_FS"].is_null());
  CHECK(doc[2]["error"].get<std::string>().rfind("supercritical_charge", 0) == 0);
}

TEST_CASE("ScanSpec validation") {
  ScanSpec spec;
  spec.models = {Model::sch};
  CHECK_THROWS_AS(spec.validate(), DomainError);  // zeta needs both models
  spec.measures.erase(Measure::zeta);
  CHECK_NOTHROW(spec.validate());
  spec.Z.clear();
  CHECK_THROWS_AS(run_scan(spec), DomainError);
  spec.Z = {-3};
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec.Z = {3};
  spec.states.clear();
  CHECK_THROWS_AS(spec.validate(), DomainError);
  CHECK_THROWS_AS(state_grid({2}, {0, 2}, {0}), DomainError);
  CHECK(state_grid({3, 4}, {1, 2}, {0, 1}).size() == 8);
  CHECK(parse_measure("diseq") == Measure::diseq);
  CHECK_FALSE(parse_measure("entropy").has_value());
}

TEST_CASE("svg plot") {
  const auto rows = run_scan(*preset("fig1"));
  const Plot fig1 = plot_scan(rows, "fig1");
  CHECK(fig1.x_label == "Z");
  REQUIRE(fig1.series.size() == 2);
  CHECK(fig1.series[0].points.size() == 68);
  std::ostringstream os;
  write_svg(os, fig1);
  const std::string svg = os.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("NaN") == std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);

  const Plot fig3 = plot_scan(run_scan(*preset("fig3")), "fig3");
  CHECK(fig3.y_label == "zeta_FS");
  CHECK(fig3.series.size() == 2 * 5);  // one per (Z, l)
}
