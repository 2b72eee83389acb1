// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"
#include "vortexcorr/error.hpp"

using namespace vortexcorr;
using namespace vortexcorr::cli;
using vortexcorr::testing::kPi;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "vortexcorr_cli_tests" / name;
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Data rows of a CSV written by write_csv (comment line and header skipped).
std::vector<std::vector<double>> csv_rows(const fs::path& p) {
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# vortexcorr ", 0) == 0);
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(row, cell, ',')) v.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(v);
  }
  return rows;
}

nlohmann::json json_file(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

}  // namespace

TEST_CASE("complex flag syntax") {
  CHECK(parse_complex("1") == Complex(1, 0));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("2.5i") == Complex(0, 2.5));
  CHECK(parse_complex("0.5+0.25i") == Complex(0.5, 0.25));
  CHECK(parse_complex("1e-3-2j") == Complex(1e-3, -2));
  CHECK(parse_complex("-1.5e+2+i") == Complex(-150, 1));
  CHECK(parse_complex(" 3 - 4i ") == Complex(3, -4));
  for (const char* bad : {"", "x", "1+", "++i", "1+2k", "i1"}) CHECK_THROWS_AS(parse_complex(bad), ConfigError);
}

TEST_CASE("state flags") {
  RunConfig cfg;
  CHECK(std::holds_alternative<FermiFockKind>(build_kind(cfg)));
  cfg.state = "coherent";
  cfg.alpha_x = "1";
  cfg.alpha_y = "i";
  const auto coh = std::get<CoherentKind>(build_kind(cfg));
  CHECK(coh.basis == Basis::Dipole);
  CHECK(coh.alpha_b == Complex(0, 1));
  cfg.n = 2;
  CHECK_THROWS_AS(build_kind(cfg), ConfigError);

  RunConfig th;
  th.state = "thermal";
  th.nbar = 0.5;
  const auto t = std::get<ThermalKind>(build_kind(th));
  CHECK(t.nbar_a == 0.5);
  CHECK(t.nbar_b == 0.5);
  th.nbar_a = 1.0;
  CHECK_THROWS_AS(build_kind(th), ConfigError);

  RunConfig bad;
  bad.state = "fermi-fock";
  bad.n = 2;
  CHECK_THROWS_AS(build_kind(bad), ConfigError);
  bad.n.reset();
  bad.basis = "polar";
  CHECK_THROWS_AS(build_kind(bad), ConfigError);

  RunConfig file;
  apply_config_json(file, {{"state", "bose-fock"}, {"n", 2}, {"m", 0}, {"alpha-x", 1.5}, {"formats", {"csv"}}});
  CHECK(file.state == "bose-fock");
  CHECK(*file.alpha_x == "1.5");
  CHECK_THROWS_AS(apply_config_json(file, {{"colour", "red"}}), ConfigError);
  CHECK_THROWS_AS(apply_config_json(file, {{"n", "two"}}), ConfigError);
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == kOk);
  CHECK(run({"profile", "--help"}).out.find("profile.csv") != std::string::npos);
  CHECK(run({}).code == kConfigError);
  CHECK(run({"profile", "--state", "laser"}).code == kConfigError);
  CHECK(run({"profile", "--state", "fermi-fock", "--n", "2"}).code == kConfigError);
  CHECK(run({"frames", "--state", "bose-fock", "--count", "3", "--out", scratch("noseed").string()}).code ==
        kConfigError);
  CHECK(run({"profile", "--formats", "csv,png", "--out", scratch("fmt").string()}).code == kConfigError);
  const auto aniso = run({"pairangle", "--state", "noon", "--out", scratch("aniso").string()});
  CHECK(aniso.code == kWrongTool);
  CHECK(aniso.err.find("--two-angle") != std::string::npos);
  CHECK(run({"profile", "--spacing", "3.5", "--out", scratch("coarse").string()}).code == kNumericalError);
}

TEST_CASE("profile command") {
  const auto fermi = scratch("fermi"), coh = scratch("coh"), bose = scratch("bose20");
  REQUIRE(run({"profile", "--state", "fermi-fock", "--n", "1", "--m", "1", "--out", fermi.string()}).code == kOk);
  REQUIRE(run({"profile", "--state", "coherent", "--alpha-x", "1", "--alpha-y", "i", "--out", coh.string()}).code ==
          kOk);
  REQUIRE(run({"profile", "--state", "bose-fock", "--n", "2", "--m", "0", "--out", bose.string()}).code == kOk);
  const auto a = csv_rows(fermi / "profile.csv"), b = csv_rows(coh / "profile.csv"), c = csv_rows(bose / "profile.csv");
  REQUIRE(a.size() == 241u * 241u);
  REQUIRE(a.size() == b.size());
  double dev_ab = 0, dev_ac = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dev_ab = std::max(dev_ab, std::abs(a[i][2] - b[i][2]));
    dev_ac = std::max(dev_ac, std::abs(a[i][2] - c[i][2]));
  }
  CHECK(dev_ab < 1e-8);
  CHECK(dev_ac < 1e-12);
  const auto summary = json_file(fermi / "profile.json");
  CHECK(summary["centre_value"] == 0.0);
  CHECK(summary["mean_number"].get<double>() == doctest::Approx(2.0));
  CHECK(json_file(bose / "profile.json")["mean_number"].get<double>() == doctest::Approx(2.0));
  CHECK(summary["provenance"]["config_hash"].get<std::string>().size() == 16);
  CHECK(fs::exists(fermi / "profile.svg"));
  CHECK(fs::exists(fermi / "profile.bin"));
  CHECK(fs::exists(fermi / "profile_radial.csv"));
  // Formats filter.
  const auto only = scratch("only");
  REQUIRE(run({"profile", "--formats", "json", "--out", only.string()}).code == kOk);
  CHECK_FALSE(fs::exists(only / "profile.csv"));
  CHECK(fs::exists(only / "profile.json"));
}

TEST_CASE("config file with flag override") {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "run.json");
    f << R"({"state": "bose-fock", "n": 2, "m": 0, "formats": ["json"], "out": ")" << (dir / "res").string()
      << "\"}";
  }
  REQUIRE(run({"profile", "--config", (dir / "run.json").string()}).code == kOk);
  CHECK(json_file(dir / "res" / "profile.json")["state"]["n"] == 2);
  REQUIRE(run({"profile", "--config", (dir / "run.json").string(), "--n", "1", "--m", "1"}).code == kOk);
  CHECK(json_file(dir / "res" / "profile.json")["state"]["n"] == 1);
  CHECK(run({"profile", "--config", (dir / "missing.json").string()}).code == kConfigError);
}

TEST_CASE("pair law commands") {
  const auto d = scratch("pairdist");
  const auto r = run({"pairdist", "--state", "fermi-fock", "--out", d.string()});
  REQUIRE(r.code == kOk);
  const auto s = json_file(d / "pairdist.json");
  CHECK(s["summary"]["mean"].get<double>() == doctest::Approx(1.8800).epsilon(1e-4));
  CHECK(s["summary"]["local_maxima"][0].get<double>() == doctest::Approx(1.7321).epsilon(1e-4));
  CHECK(s["bose-form-corrected"] == true);
  CHECK(s["closed_form_sup_deviation"].get<double>() < 1e-6);
  const auto rows = csv_rows(d / "pairdist.csv");
  CHECK(rows.size() == 801);
  CHECK(rows[100][0] == doctest::Approx(1.0));

  const auto b = scratch("pairdist_bose");
  REQUIRE(run({"pairdist", "--state", "bose-fock", "--out", b.string(), "--formats", "csv"}).code == kOk);
  CHECK(csv_rows(b / "pairdist.csv")[0].size() == 4);  // d, density, corrected, printed

  const auto a = scratch("pairangle");
  REQUIRE(run({"pairangle", "--state", "coherent", "--out", a.string()}).code == kOk);
  for (const auto& row : csv_rows(a / "pairangle.csv")) CHECK(std::abs(row[1] - 1 / kPi) < 1e-8);

  const auto t = scratch("twoangle");
  REQUIRE(run({"pairdist", "--state", "noon", "--two-angle", "--points", "24", "--out", t.string()}).code == kOk);
  const auto grid = csv_rows(t / "twoangle.csv");
  REQUIRE(grid.size() == 24u * 24u);
  for (const auto& row : grid) {
    CHECK(std::abs(row[2] - std::pow(std::sin(row[0] + row[1]), 2) / (2 * kPi * kPi)) < 1e-10);
  }
}

TEST_CASE("frames command") {
  const auto a = scratch("frames_a"), b = scratch("frames_b");
  REQUIRE(run({"frames", "--state", "bose-fock", "--count", "3", "--seed", "7", "--out", a.string()}).code == kOk);
  std::istringstream in(slurp(a / "frames.csv"));
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 5);  // header, columns, 3 frames
  REQUIRE(run({"frames", "--state", "fermi-fock", "--count", "20000", "--seed", "1", "--stats", "--threads", "1",
               "--out", a.string()})
              .code == kOk);
  REQUIRE(run({"frames", "--state", "fermi-fock", "--count", "20000", "--seed", "1", "--stats", "--threads", "3",
               "--out", b.string()})
              .code == kOk);
  for (const char* f : {"frames.csv", "frames_stats.json", "frames_distance.csv", "frames_angle.svg"})
    CHECK(slurp(a / f) == slurp(b / f));
  const auto stats = json_file(a / "frames_stats.json");
  CHECK(stats["count"] == 20000);
  CHECK(stats["expected_mean_distance"].get<double>() == doctest::Approx(std::sqrt(9 * kPi / 8)).epsilon(1e-9));
  CHECK(std::abs(stats["z_score"].get<double>()) < 4);
  CHECK(stats["chi2_angle"]["p_value"].get<double>() > 1e-4);
}

TEST_CASE("verify command") {
  const auto v = scratch("verify");
  const auto r = run({"verify", "--resolution", "9", "--out", v.string()});
  CHECK(r.code == kOk);
  CHECK(r.out.find("verification passed") != std::string::npos);
  const auto doc = json_file(v / "verify.json");
  CHECK(doc["passed"] == true);
  bool typo = false, convention = false;
  for (const auto& row : doc["reports"]) {
    if (row["claim"] == "distance-law-bose-factor") typo = row["verdict"] == "Typo-suspected";
    if (row["claim"] == "second-moment") convention = row["verdict"] == "Convention-dependent";
  }
  CHECK(typo);
  CHECK(convention);
}
