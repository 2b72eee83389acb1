// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "vortexcorr/density.hpp"
#include "vortexcorr/error.hpp"
#include "vortexcorr/frames.hpp"
#include "vortexcorr/io.hpp"
#include "vortexcorr/oracle.hpp"
#include "vortexcorr/pair_stats.hpp"

namespace vortexcorr::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

const char* const kProfileFooter = R"(Outputs (in --out):
  profile.csv         x,y,rho1            one row per grid point, x fastest
  profile_radial.csv  r,rho1_cut,rho1_mean  cut along +x and angular mean
  profile.json        summary and provenance
  profile.bin         JSON header line + little-endian float64 [ny][nx]
  profile.svg, profile_radial.svg)";

const char* const kPairdistFooter = R"(Outputs (in --out):
  pairdist.csv   d,density[,closed_form][,closed_form_printed]
  pairdist.json  mean, second_moment, variance, local_maxima, flags, provenance
  pairdist.svg   quadrature law over the closed forms
With --two-angle: twoangle.csv (theta,vartheta,density), twoangle.json,
twoangle.bin, twoangle.svg.)";

const char* const kPairangleFooter = R"(Outputs (in --out):
  pairangle.csv   dtheta,density[,closed_form][,closed_form_printed]
  pairangle.json  normalization, flags, provenance
  pairangle.svg
The relative angle is folded to [0, pi). States without rotation invariance
(noon) exit with code 4; use --two-angle for them.)";

const char* const kFramesFooter = R"(Outputs (in --out):
  frames.csv  JSON header line, then frame_index,x1,y1,x2,y2
With --stats: frames_stats.json, frames_distance.csv and frames_angle.csv
(centre,empirical,quadrature), frames_profile.csv (x,y,density) and SVGs.)";

const char* const kVerifyFooter = R"(Outputs (in --out):
  verify.json  one object per claim with verdict and deviation
Exit status 1 when any engine-versus-oracle row fails.)";

std::vector<const char*> argv_of(const std::vector<std::string>& args, std::vector<std::string>& storage) {
  storage.clear();
  storage.push_back("vortexcorr");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  return argv;
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

int thread_count(const RunConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  return int(std::max(1u, std::thread::hardware_concurrency()));
}

Basis parse_basis(const std::string& s) {
  if (s == "vortex") return Basis::Vortex;
  if (s == "dipole") return Basis::Dipole;
  throw ConfigError(fmt::format("unknown basis '{}' (expected vortex or dipole)", s));
}

class Outputs {
 public:
  Outputs(const RunConfig& cfg, std::ostream& log) : dir_(cfg.out), log_(log) {
    for (const auto& f : cfg.formats) {
      if (f != "csv" && f != "json" && f != "svg") throw ConfigError(fmt::format("unknown output format '{}'", f));
      formats_.insert(f);
    }
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw ConfigError(fmt::format("cannot create output directory {}: {}", dir_.string(), ec.message()));
  }

  bool want(const std::string& f) const { return formats_.count(f) > 0; }

  template <class W>
  void write(const std::string& name, W&& writer) {
    const fs::path path = dir_ / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError(fmt::format("cannot open {} for writing", path.string()));
    writer(file);
    if (!file) throw ConfigError(fmt::format("failed writing {}", path.string()));
    fmt::print(log_, "wrote {}\n", path.string());
  }

  void text(const std::string& name, const std::string& body) {
    write(name, [&](std::ostream& o) { o << body; });
  }

  void json_file(const std::string& name, const json& doc) { text(name, doc.dump(2) + "\n"); }

 private:
  fs::path dir_;
  std::set<std::string> formats_;
  std::ostream& log_;
};

Provenance provenance(const RunConfig& cfg, json quadrature) {
  Provenance p;
  p.config_hash = config_hash(canonical_config(cfg));
  p.seed = cfg.seed;
  p.quadrature = std::move(quadrature);
  return p;
}

json quadrature_json(const PairQuadrature& q, PairVariable v) {
  switch (v) {
    case PairVariable::Distance:
      return {{"gauss_hermite", q.hermite}, {"azimuth_trapezoid", q.azimuth}};
    case PairVariable::RelAngle:
      return {{"gauss_legendre_radial", q.radial}, {"angle_trapezoid", q.angle}};
    case PairVariable::TwoAngle:
      return {{"gauss_legendre_radial", q.radial}};
  }
  return nullptr;
}

json summary_json(const DistSummary& s) {
  return {{"mean", s.mean}, {"second_moment", s.second_moment}, {"variance", s.variance},
          {"local_maxima", s.local_maxima}};
}

// Closed form of `kind` if one exists.
template <class F>
std::optional<std::function<double(double)>> closed(F law, const StateKind& kind, FormVariant variant, double probe) {
  try {
    law(kind, probe, variant);
  } catch (const ConfigError&) {
    return std::nullopt;
  }
  return [law, kind, variant](double x) { return law(kind, x, variant); };
}

bool printed_differs(const StateKind& kind) {
  if (std::holds_alternative<FermiFockKind>(kind)) return true;
  if (const auto* b = std::get_if<BoseFockKind>(&kind)) return b->n == 1 && b->m == 1 && b->basis == Basis::Vortex;
  return false;
}

// ---------------------------------------------------------------------------

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
  const auto kind = build_kind(cfg);
  const auto state = make_state(kind);
  const auto field = density_field1(state, cfg.spacing);
  const double mean_n = TwoModeField(state).mean_number();
  if (std::abs(field.total - mean_n) > 1e-8 * std::max(1.0, mean_n)) {
    throw NumericalError(fmt::format("profile integrates to {:.12g}, expected <N> = {:.12g}; reduce --spacing",
                                     field.total, mean_n));
  }
  const auto prov = provenance(cfg, {{"rule", "trapezoid"}, {"spacing", cfg.spacing}});
  Outputs files(cfg, out);
  const TwoModeField engine(state);

  std::vector<std::vector<double>> radial;
  const auto azimuth = periodic_trapezoid(64, 2 * kPi);
  for (int i = 0; i < (field.points + 1) / 2; ++i) {
    const double r = i * field.spacing;
    double mean = 0;
    for (std::size_t k = 0; k < azimuth.size(); ++k) mean += azimuth.weights[k] * engine.rho1(Point2D::polar(r, azimuth.nodes[k]));
    radial.push_back({r, engine.rho1({r, 0.0}), mean / (2 * kPi)});
  }

  if (files.want("csv")) {
    std::vector<std::vector<double>> rows;
    for (int iy = 0; iy < field.points; ++iy)
      for (int ix = 0; ix < field.points; ++ix) rows.push_back({field.x(ix), field.y(iy), field.at(ix, iy)});
    files.write("profile.csv", [&](std::ostream& o) { write_csv(o, prov, {"x", "y", "rho1"}, rows); });
    files.write("profile_radial.csv",
                [&](std::ostream& o) { write_csv(o, prov, {"r", "rho1_cut", "rho1_mean"}, radial); });
  }
  const double centre = engine.rho1({0.0, 0.0});
  double peak = 0;
  for (double v : field.values) peak = std::max(peak, v);
  if (files.want("json")) {
    files.json_file("profile.json", {{"state", to_json(kind)},
                                     {"mean_number", mean_n},
                                     {"integral", field.total},
                                     {"centre_value", centre},
                                     {"max_value", peak},
                                     {"grid", {{"origin", field.origin}, {"spacing", field.spacing}, {"points", field.points}}},
                                     {"provenance", prov.to_json()}});
    BinaryArray arr;
    arr.header = {{"quantity", "rho1"}, {"origin", field.origin}, {"spacing", field.spacing}, {"layout", "[iy][ix]"}};
    arr.shape = {std::size_t(field.points), std::size_t(field.points)};
    arr.values = field.values;
    files.write("profile.bin", [&](std::ostream& o) { write_binary(o, arr, prov); });
  }
  if (files.want("svg")) {
    files.text("profile.svg", svg_heatmap(fmt::format("one-particle density, {}", describe(kind)), field.values,
                                          std::size_t(field.points), std::size_t(field.points), field.origin,
                                          -field.origin, field.origin, -field.origin));
    SvgSeries cut{"cut along +x", {}, {}};
    SvgSeries avg{"angular mean", {}, {}, "#d62728", true};
    for (const auto& row : radial) {
      cut.x.push_back(row[0]);
      cut.y.push_back(row[1]);
      avg.x.push_back(row[0]);
      avg.y.push_back(row[2]);
    }
    files.text("profile_radial.svg", svg_lines("radial cut", "r", "rho1", {cut, avg}));
  }
  fmt::print(out, "state {}: <N> = {:.17g}, integral = {:.17g}, centre = {:.17g}, max = {:.17g}\n", describe(kind),
             mean_n, field.total, centre, peak);
  return kOk;
}

int two_angle_outputs(const RunConfig& cfg, const StateKind& kind, const QuantumState& state, std::ostream& out) {
  const int n = cfg.points > 0 ? cfg.points : kDefaultTwoAnglePoints;
  const PairQuadrature rule;
  const auto dist = two_angle_distribution(state, n, thread_count(cfg), rule);
  const auto prov = provenance(cfg, quadrature_json(rule, PairVariable::TwoAngle));
  Outputs files(cfg, out);
  if (files.want("csv")) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rows.push_back({2 * kPi * i / n, 2 * kPi * j / n, dist.values[std::size_t(i) * n + std::size_t(j)]});
    files.write("twoangle.csv", [&](std::ostream& o) { write_csv(o, prov, {"theta", "vartheta", "density"}, rows); });
  }
  if (files.want("json")) {
    files.json_file("twoangle.json", {{"state", to_json(kind)},
                                      {"points", n},
                                      {"normalization", dist.normalization},
                                      {"flags", dist.flags},
                                      {"provenance", prov.to_json()}});
    BinaryArray arr;
    arr.header = {{"quantity", "two-angle density"}, {"layout", "[theta][vartheta]"}, {"step", 2 * kPi / n}};
    arr.shape = {std::size_t(n), std::size_t(n)};
    arr.values = dist.values;
    files.write("twoangle.bin", [&](std::ostream& o) { write_binary(o, arr, prov); });
  }
  if (files.want("svg")) {
    // Heat map rows run along ϑ, so transpose to put θ on the horizontal axis.
    std::vector<double> img(dist.values.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) img[std::size_t(j) * n + std::size_t(i)] = dist.values[std::size_t(i) * n + std::size_t(j)];
    files.text("twoangle.svg", svg_heatmap(fmt::format("joint angle density, {}", describe(kind)), img, std::size_t(n),
                                           std::size_t(n), 0, 2 * kPi, 0, 2 * kPi));
  }
  double peak = 0;
  for (double v : dist.values) peak = std::max(peak, v);
  fmt::print(out, "state {}: two-angle law on {}x{}, normalization = {:.17g}, max = {:.17g}\n", describe(kind), n, n,
             dist.normalization, peak);
  return kOk;
}

int cmd_pairdist(const RunConfig& cfg, std::ostream& out) {
  const auto kind = build_kind(cfg);
  const auto state = make_state(kind);
  if (cfg.two_angle) return two_angle_outputs(cfg, kind, state, out);
  const int n = cfg.points > 0 ? cfg.points : kDefaultDistancePoints;
  const PairQuadrature rule;
  const auto dist = distance_distribution(state, n, thread_count(cfg), rule);
  const auto summary = summarize(dist);
  const auto law = closed(
      [](const StateKind& k, double d, FormVariant v) { return closed_form_distance(k, d, v); }, kind,
      FormVariant::Corrected, 1.0);
  const bool printed = std::holds_alternative<BoseFockKind>(kind) && printed_differs(kind);
  const auto prov = provenance(cfg, quadrature_json(rule, PairVariable::Distance));
  Outputs files(cfg, out);

  std::vector<std::string> columns = {"d", "density"};
  if (law) columns.push_back("closed_form");
  if (printed) columns.push_back("closed_form_printed");
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < n; ++i) {
    const double d = dist.x(i);
    std::vector<double> row = {d, dist.values[std::size_t(i)]};
    if (law) row.push_back((*law)(d));
    if (printed) row.push_back(closed_form_distance(kind, d, FormVariant::Printed));
    rows.push_back(std::move(row));
  }
  if (files.want("csv")) files.write("pairdist.csv", [&](std::ostream& o) { write_csv(o, prov, columns, rows); });
  auto flags = dist.flags;
  flags.push_back("bose-form-corrected");
  if (files.want("json")) {
    json doc = {{"state", to_json(kind)},
                {"variable", "distance"},
                {"points", n},
                {"normalization", dist.normalization},
                {"summary", summary_json(summary)},
                {"flags", flags},
                {"bose-form-corrected", true},
                {"provenance", prov.to_json()}};
    if (law) {
      double sup = 0;
      for (const auto& r : rows) sup = std::max(sup, std::abs(r[1] - r[2]));
      doc["closed_form_sup_deviation"] = sup;
    }
    files.json_file("pairdist.json", doc);
  }
  if (files.want("svg")) {
    std::vector<SvgSeries> series;
    SvgSeries q{"quadrature", {}, {}};
    SvgSeries c{"closed form", {}, {}, "#d62728", true};
    SvgSeries p{"closed form, printed", {}, {}, "#7f7f7f", true};
    for (const auto& r : rows) {
      q.x.push_back(r[0]);
      q.y.push_back(r[1]);
      if (law) {
        c.x.push_back(r[0]);
        c.y.push_back(r[2]);
      }
      if (printed) {
        p.x.push_back(r[0]);
        p.y.push_back(r[3]);
      }
    }
    series.push_back(q);
    if (law) series.push_back(c);
    if (printed) series.push_back(p);
    files.text("pairdist.svg", svg_lines(fmt::format("pair distance law, {}", describe(kind)), "d", "D(d)", series));
  }
  std::string maxima;
  for (double m : summary.local_maxima) maxima += (maxima.empty() ? "" : ", ") + fmt::format("{:.17g}", m);
  fmt::print(out, "state {}: mean = {:.17g}, second moment = {:.17g}, variance = {:.17g}, maxima = [{}]\n",
             describe(kind), summary.mean, summary.second_moment, summary.variance, maxima);
  return kOk;
}

int cmd_pairangle(const RunConfig& cfg, std::ostream& out) {
  const auto kind = build_kind(cfg);
  const auto state = make_state(kind);
  if (cfg.two_angle) return two_angle_outputs(cfg, kind, state, out);
  const int n = cfg.points > 0 ? cfg.points : kDefaultAnglePoints;
  const PairQuadrature rule;
  const auto dist = angle_distribution(state, n, thread_count(cfg), rule);
  const auto law = closed([](const StateKind& k, double a, FormVariant v) { return closed_form_angle(k, a, v); },
                          kind, FormVariant::Corrected, 0.5);
  const bool printed = printed_differs(kind) && law.has_value();
  const auto prov = provenance(cfg, quadrature_json(rule, PairVariable::RelAngle));
  Outputs files(cfg, out);

  std::vector<std::string> columns = {"dtheta", "density"};
  if (law) columns.push_back("closed_form");
  if (printed) columns.push_back("closed_form_printed");
  std::vector<std::vector<double>> rows;
  double lo = dist.values[0], hi = dist.values[0];
  for (int i = 0; i < n; ++i) {
    const double a = dist.x(i);
    std::vector<double> row = {a, dist.values[std::size_t(i)]};
    lo = std::min(lo, row[1]);
    hi = std::max(hi, row[1]);
    if (law) row.push_back((*law)(a));
    if (printed) row.push_back(closed_form_angle(kind, a, FormVariant::Printed));
    rows.push_back(std::move(row));
  }
  if (files.want("csv")) files.write("pairangle.csv", [&](std::ostream& o) { write_csv(o, prov, columns, rows); });
  if (files.want("json")) {
    files.json_file("pairangle.json", {{"state", to_json(kind)},
                                       {"variable", "relative-angle"},
                                       {"domain", {0.0, kPi}},
                                       {"points", n},
                                       {"normalization", dist.normalization},
                                       {"min", lo},
                                       {"max", hi},
                                       {"flags", dist.flags},
                                       {"provenance", prov.to_json()}});
  }
  if (files.want("svg")) {
    SvgSeries q{"quadrature", {}, {}};
    SvgSeries c{"closed form", {}, {}, "#d62728", true};
    SvgSeries p{"closed form, printed labels", {}, {}, "#7f7f7f", true};
    for (const auto& r : rows) {
      q.x.push_back(r[0]);
      q.y.push_back(r[1]);
      if (law) {
        c.x.push_back(r[0]);
        c.y.push_back(r[2]);
      }
      if (printed) {
        p.x.push_back(r[0]);
        p.y.push_back(r[3]);
      }
    }
    std::vector<SvgSeries> series = {q};
    if (law) series.push_back(c);
    if (printed) series.push_back(p);
    files.text("pairangle.svg",
               svg_lines(fmt::format("relative angle law, {}", describe(kind)), "dtheta", "D(dtheta)", series));
  }
  fmt::print(out, "state {}: relative-angle law min = {:.17g}, max = {:.17g}, normalization = {:.17g}\n",
             describe(kind), lo, hi, dist.normalization);
  return kOk;
}

json chi_json(const ChiSquareResult& r) {
  return {{"statistic", r.statistic}, {"dof", r.dof}, {"p_value", r.p_value}, {"bins_used", r.bins_used}};
}

int cmd_frames(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seed) throw ConfigError("frames requires --seed (no implicit entropy)");
  const auto kind = build_kind(cfg);
  const auto state = make_state(kind);
  const int threads = thread_count(cfg);
  const auto set = generate_frames(state, std::size_t(cfg.count), *cfg.seed, threads, to_json(kind));
  const auto prov = provenance(cfg, nullptr);
  Outputs files(cfg, out);
  files.write("frames.csv", [&](std::ostream& o) { write_frames(o, set, prov.to_json()); });
  fmt::print(out, "state {}: {} frames, seed {}, angular acceptance {:.6f}\n", describe(kind), set.frames.size(),
             *cfg.seed, set.acceptance_rate);
  if (!cfg.stats) return kOk;

  const auto stats = empirical_pair_stats(set, cfg.bins);
  const auto moments = sample_moments(stats.distances);
  const auto quad = distance_distribution(state, kDefaultDistancePoints, threads);
  const double expected = summarize(quad).mean;
  const auto chi_d = chi_square_test(stats.distance, quad.evaluate);
  json doc = {{"state", to_json(kind)},
              {"count", set.frames.size()},
              {"acceptance_rate", set.acceptance_rate},
              {"mean_distance", moments.mean},
              {"standard_error", moments.standard_error},
              {"expected_mean_distance", expected},
              {"z_score", (moments.mean - expected) / moments.standard_error},
              {"within_3_standard_errors", std::abs(moments.mean - expected) < 3 * moments.standard_error},
              {"chi2_distance", chi_json(chi_d)},
              {"bins", cfg.bins},
              {"provenance", prov.to_json()}};
  std::optional<PairDistribution> angle;
  if (rotation_invariant(state)) {
    angle = angle_distribution(state, kDefaultAnglePoints, threads);
    doc["chi2_angle"] = chi_json(chi_square_test(stats.angle, angle->evaluate));
  } else {
    doc["chi2_angle"] = nullptr;
  }
  const auto profile = empirical_profile(set, 60);

  if (files.want("json")) files.json_file("frames_stats.json", doc);
  const auto hist_rows = [](const Histogram& h, const std::function<double(double)>& law) {
    std::vector<std::vector<double>> rows;
    const auto dens = h.density();
    for (std::size_t i = 0; i < dens.size(); ++i) {
      const double c = h.centre(int(i));
      rows.push_back({c, dens[i], law ? law(c) : std::nan("")});
    }
    return rows;
  };
  const auto drows = hist_rows(stats.distance, quad.evaluate);
  const auto arows = hist_rows(stats.angle, angle ? angle->evaluate : std::function<double(double)>{});
  if (files.want("csv")) {
    files.write("frames_distance.csv",
                [&](std::ostream& o) { write_csv(o, prov, {"centre", "empirical", "quadrature"}, drows); });
    files.write("frames_angle.csv",
                [&](std::ostream& o) { write_csv(o, prov, {"centre", "empirical", "quadrature"}, arows); });
    std::vector<std::vector<double>> prow;
    for (int iy = 0; iy < profile.bins; ++iy)
      for (int ix = 0; ix < profile.bins; ++ix) prow.push_back({profile.centre(ix), profile.centre(iy), profile.density(ix, iy)});
    files.write("frames_profile.csv", [&](std::ostream& o) { write_csv(o, prov, {"x", "y", "density"}, prow); });
  }
  if (files.want("svg")) {
    const auto overlay = [](const std::vector<std::vector<double>>& rows, const std::string& label) {
      SvgSeries s{label, {}, {}, "#d62728"};
      for (const auto& r : rows)
        if (!std::isnan(r[2])) {
          s.x.push_back(r[0]);
          s.y.push_back(r[2]);
        }
      return s;
    };
    files.text("frames_distance.svg", svg_bars("per-frame pair distances", "d", 0, kMaxDistance,
                                               stats.distance.density(), {overlay(drows, "quadrature")}));
    std::vector<SvgSeries> aover;
    if (angle) aover.push_back(overlay(arows, "quadrature"));
    files.text("frames_angle.svg",
               svg_bars("per-frame relative angles", "dtheta", 0, kPi, stats.angle.density(), aover));
    std::vector<double> img;
    for (int iy = 0; iy < profile.bins; ++iy)
      for (int ix = 0; ix < profile.bins; ++ix) img.push_back(profile.density(ix, iy));
    files.text("frames_profile.svg", svg_heatmap("pooled detections", img, std::size_t(profile.bins),
                                                 std::size_t(profile.bins), profile.lo, profile.hi, profile.lo,
                                                 profile.hi));
  }
  fmt::print(out, "mean distance {:.17g} +- {:.3g} (expected {:.17g}), chi2 distance p = {:.4g}", moments.mean,
             moments.standard_error, expected, chi_d.p_value);
  if (angle) fmt::print(out, ", chi2 angle p = {:.4g}", doc["chi2_angle"]["p_value"].get<double>());
  fmt::print(out, "\n");
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto rows = verify_all(cfg.resolution, thread_count(cfg));
  const bool ok = verification_passed(rows);
  const auto prov = provenance(cfg, {{"pair_lattice", cfg.resolution}});
  Outputs files(cfg, out);
  out << format_table(rows);
  if (files.want("json")) {
    json list = json::array();
    for (const auto& r : rows) list.push_back(to_json(r));
    files.json_file("verify.json", {{"passed", ok}, {"reports", list}, {"provenance", prov.to_json()}});
  }
  fmt::print(out, "{}\n", ok ? "verification passed" : "verification FAILED");
  return ok ? kOk : kVerificationFailed;
}

void add_state_options(CLI::App* sub, RunConfig& cfg, std::string& config_path) {
  sub->add_option("--config", config_path, "JSON config file; flags override its values");
  sub->add_option("--state", cfg.state, "fermi-fock|bose-fock|coherent|thermal|cothermal|noon")
      ->check(CLI::IsMember({"fermi-fock", "bose-fock", "coherent", "thermal", "cothermal", "noon"}));
  sub->add_option("--n", cfg.n, "occupation of the first mode");
  sub->add_option("--m", cfg.m, "occupation of the second mode");
  sub->add_option("--alpha-x", cfg.alpha_x, "coherent amplitude of the x dipole mode (a+bi)");
  sub->add_option("--alpha-y", cfg.alpha_y, "coherent amplitude of the y dipole mode (a+bi)");
  sub->add_option("--alpha-a", cfg.alpha_a, "coherent amplitude of the first mode of --basis (a+bi)");
  sub->add_option("--alpha-b", cfg.alpha_b, "coherent amplitude of the second mode of --basis (a+bi)");
  sub->add_option("--nbar", cfg.nbar, "thermal mean occupation of both modes");
  sub->add_option("--nbar-a", cfg.nbar_a, "thermal mean occupation of the first mode");
  sub->add_option("--nbar-b", cfg.nbar_b, "thermal mean occupation of the second mode");
  sub->add_option("--basis", cfg.basis, "vortex|dipole mode pair the state is written in");
  sub->add_option("--threads", cfg.threads, "worker threads (0 = all); output does not depend on it");
  sub->add_option("--out", cfg.out, "output directory");
  sub->add_option("--formats", cfg.formats, "subset of csv,json,svg")->delimiter(',');
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ConfigError("empty complex number");
  const auto number = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (end != part.c_str() + part.size()) throw ConfigError(fmt::format("cannot parse complex number '{}'", text));
    return v;
  };
  const char last = s.back();
  if (last != 'i' && last != 'j') return {number(s.empty() ? "x" : s), 0.0};
  s.pop_back();
  // Split before the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(s)};
  const std::string re = s.substr(0, split);
  if (re.empty() || re == "+" || re == "-") throw ConfigError(fmt::format("cannot parse complex number '{}'", text));
  return {number(re), number(s.substr(split))};
}

void apply_config_json(RunConfig& cfg, const json& doc) {
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  const auto complex_text = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return fmt::format("{:.17g}", v.get<double>());
    throw ConfigError("complex values must be strings like \"1+2i\" or numbers");
  };
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "state") cfg.state = v.get<std::string>();
      else if (key == "n") cfg.n = v.get<int>();
      else if (key == "m") cfg.m = v.get<int>();
      else if (key == "alpha-x") cfg.alpha_x = complex_text(v);
      else if (key == "alpha-y") cfg.alpha_y = complex_text(v);
      else if (key == "alpha-a") cfg.alpha_a = complex_text(v);
      else if (key == "alpha-b") cfg.alpha_b = complex_text(v);
      else if (key == "nbar") cfg.nbar = v.get<double>();
      else if (key == "nbar-a") cfg.nbar_a = v.get<double>();
      else if (key == "nbar-b") cfg.nbar_b = v.get<double>();
      else if (key == "basis") cfg.basis = v.get<std::string>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "count") cfg.count = v.get<std::uint64_t>();
      else if (key == "points") cfg.points = v.get<int>();
      else if (key == "spacing") cfg.spacing = v.get<double>();
      else if (key == "resolution") cfg.resolution = v.get<int>();
      else if (key == "bins") cfg.bins = v.get<int>();
      else if (key == "two-angle") cfg.two_angle = v.get<bool>();
      else if (key == "stats") cfg.stats = v.get<bool>();
      else if (key == "threads") cfg.threads = v.get<int>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "formats") cfg.formats = v.get<std::vector<std::string>>();
      else throw ConfigError(fmt::format("unknown config key '{}'", key));
    }
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("bad config value: {}", e.what()));
  }
}

StateKind build_kind(const RunConfig& cfg) {
  const bool dipole_alpha = cfg.alpha_x || cfg.alpha_y;
  const bool generic_alpha = cfg.alpha_a || cfg.alpha_b;
  const bool any_alpha = dipole_alpha || generic_alpha;
  const bool any_nbar = cfg.nbar || cfg.nbar_a || cfg.nbar_b;
  const bool any_occ = cfg.n || cfg.m;
  const auto reject = [&](bool present, const char* what) {
    if (present) throw ConfigError(fmt::format("{} does not apply to --state {}", what, cfg.state));
  };
  if (dipole_alpha && generic_alpha) throw ConfigError("use either --alpha-x/--alpha-y or --alpha-a/--alpha-b");
  if (cfg.nbar && (cfg.nbar_a || cfg.nbar_b)) throw ConfigError("use either --nbar or --nbar-a/--nbar-b");
  const auto basis_or = [&](Basis fallback) { return cfg.basis ? parse_basis(*cfg.basis) : fallback; };
  const auto amplitudes = [&](Complex da, Complex db, Basis& basis) {
    if (dipole_alpha) {
      if (cfg.basis && parse_basis(*cfg.basis) != Basis::Dipole) {
        throw ConfigError("--alpha-x/--alpha-y refer to the dipole basis");
      }
      basis = Basis::Dipole;
      return std::pair{cfg.alpha_x ? parse_complex(*cfg.alpha_x) : Complex(0.0),
                       cfg.alpha_y ? parse_complex(*cfg.alpha_y) : Complex(0.0)};
    }
    if (generic_alpha) {
      return std::pair{cfg.alpha_a ? parse_complex(*cfg.alpha_a) : Complex(0.0),
                       cfg.alpha_b ? parse_complex(*cfg.alpha_b) : Complex(0.0)};
    }
    return std::pair{da, db};
  };
  const auto nbar_pair = [&](double da, double db) {
    const double a = cfg.nbar ? *cfg.nbar : cfg.nbar_a.value_or(da);
    const double b = cfg.nbar ? *cfg.nbar : cfg.nbar_b.value_or(db);
    if (!(a >= 0.0) || !(b >= 0.0)) throw ConfigError("mean occupations must be non-negative");
    return std::pair{a, b};
  };

  if (cfg.state == "fermi-fock") {
    reject(any_alpha, "--alpha-*");
    reject(any_nbar, "--nbar*");
    if (cfg.n.value_or(1) != 1 || cfg.m.value_or(1) != 1) {
      throw ConfigError("fermi-fock supports --n 1 --m 1 only (Pauli exclusion allows at most one per mode)");
    }
    return FermiFockKind{basis_or(Basis::Vortex)};
  }
  if (cfg.state == "bose-fock") {
    reject(any_alpha, "--alpha-*");
    reject(any_nbar, "--nbar*");
    const int n = cfg.n.value_or(1), m = cfg.m.value_or(1);
    if (n < 0 || m < 0 || n + m > 40) throw ConfigError("bose-fock occupations must be in 0..40 in total");
    return BoseFockKind{n, m, basis_or(Basis::Vortex)};
  }
  if (cfg.state == "coherent") {
    reject(any_occ, "--n/--m");
    reject(any_nbar, "--nbar*");
    Basis basis = basis_or(Basis::Dipole);
    const auto [a, b] = amplitudes(Complex(0.0, 1.0), Complex(1.0, 0.0), basis);
    if (!any_alpha && basis != Basis::Dipole) throw ConfigError("give --alpha-a/--alpha-b with --basis vortex");
    return CoherentKind{a, b, basis};
  }
  if (cfg.state == "thermal") {
    reject(any_alpha, "--alpha-*");
    reject(any_occ, "--n/--m");
    const auto [a, b] = nbar_pair(1.0, 1.0);
    return ThermalKind{a, b, basis_or(Basis::Vortex)};
  }
  if (cfg.state == "cothermal") {
    reject(any_occ, "--n/--m");
    Basis basis = basis_or(Basis::Dipole);
    const CothermalKind d;
    const auto [a, b] = amplitudes(d.alpha_a, d.alpha_b, basis);
    if (!any_alpha && basis != Basis::Dipole) throw ConfigError("give --alpha-a/--alpha-b with --basis vortex");
    const auto [na, nb] = nbar_pair(d.nbar_a, d.nbar_b);
    return CothermalKind{a, b, na, nb, basis};
  }
  if (cfg.state == "noon") {
    reject(any_alpha, "--alpha-*");
    reject(any_nbar, "--nbar*");
    reject(any_occ, "--n/--m");
    reject(cfg.basis.has_value(), "--basis");
    return NoonKind{};
  }
  throw ConfigError(fmt::format("unknown state '{}'", cfg.state));
}

json canonical_config(const RunConfig& cfg) {
  json j = {{"command", cfg.command}, {"state", to_json(build_kind(cfg))}};
  if (cfg.command == "profile") j["spacing"] = cfg.spacing;
  if (cfg.command == "pairdist" || cfg.command == "pairangle") {
    j["points"] = cfg.points;
    j["two_angle"] = cfg.two_angle;
  }
  if (cfg.command == "frames") {
    j["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
    j["count"] = cfg.count;
    j["stats"] = cfg.stats;
    j["bins"] = cfg.bins;
  }
  if (cfg.command == "verify") j["resolution"] = cfg.resolution;
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string config_path;
  CLI::App app{"Reduced densities, pair statistics and single-shot frames of two-mode vortex states", "vortexcorr"};
  app.set_version_flag("--version", std::string(VORTEXCORR_VERSION));
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 verification failure, 2 configuration error, 3 numerical failure,\n"
             "4 tool not applicable to the state. All floats are written with 17 significant digits.");

  auto* profile = app.add_subcommand("profile", "one-particle density grid and radial cut");
  add_state_options(profile, cfg, config_path);
  profile->add_option("--spacing", cfg.spacing, "grid spacing on [-6, 6]");
  profile->footer(kProfileFooter);

  auto* pairdist = app.add_subcommand("pairdist", "pair distance law D(d) on [0, 8]");
  add_state_options(pairdist, cfg, config_path);
  pairdist->add_option("--points", cfg.points, "grid points (default 801, or 72 per axis with --two-angle)");
  pairdist->add_flag("--two-angle", cfg.two_angle, "joint angle law D(theta, vartheta) instead");
  pairdist->footer(kPairdistFooter);

  auto* pairangle = app.add_subcommand("pairangle", "relative angle law D(dtheta) on [0, pi)");
  add_state_options(pairangle, cfg, config_path);
  pairangle->add_option("--points", cfg.points, "grid points (default 180, or 72 per axis with --two-angle)");
  pairangle->add_flag("--two-angle", cfg.two_angle, "joint angle law D(theta, vartheta) instead");
  pairangle->footer(kPairangleFooter);

  auto* frames = app.add_subcommand("frames", "single-shot two-particle frames");
  add_state_options(frames, cfg, config_path);
  frames->add_option("--seed", cfg.seed, "64-bit seed (required)");
  frames->add_option("--count", cfg.count, "number of frames");
  frames->add_flag("--stats", cfg.stats, "per-frame pair statistics against the quadrature laws");
  frames->add_option("--bins", cfg.bins, "histogram bins for --stats")->check(CLI::PositiveNumber);
  frames->footer(kFramesFooter);

  auto* verify = app.add_subcommand("verify", "cross-check the engine against the first-quantized oracle");
  add_state_options(verify, cfg, config_path);
  verify->add_option("--resolution", cfg.resolution, "points per axis of the pair lattice")->check(CLI::Range(2, 201));
  verify->footer(kVerifyFooter);

  try {
    if (const auto path = find_config_path(args)) {
      std::ifstream file(*path);
      if (!file) throw ConfigError(fmt::format("cannot read config file {}", *path));
      json doc;
      try {
        doc = json::parse(file);
      } catch (const json::exception& e) {
        throw ConfigError(fmt::format("config file {} is not JSON: {}", *path, e.what()));
      }
      apply_config_json(cfg, doc);
    }
    std::vector<std::string> storage;
    auto argv = argv_of(args, storage);
    try {
      app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kOk : kConfigError;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.command == "profile") return cmd_profile(cfg, out);
    if (cfg.command == "pairdist") return cmd_pairdist(cfg, out);
    if (cfg.command == "pairangle") return cmd_pairangle(cfg, out);
    if (cfg.command == "frames") return cmd_frames(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    throw ConfigError("no command given");
  } catch (const AnisotropicState& e) {
    fmt::print(err, "error: {}\nhint: rerun with --two-angle for the joint angle law\n", e.what());
    return kWrongTool;
  } catch (const ConfigError& e) {
    fmt::print(err, "configuration error: {}\n", e.what());
    return kConfigError;
  } catch (const EmptyFrames& e) {
    fmt::print(err, "configuration error: {}\n", e.what());
    return kConfigError;
  } catch (const NumericalError& e) {
    fmt::print(err, "numerical error: {}\n", e.what());
    return kNumericalError;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kNumericalError;
  }
}

}  // namespace vortexcorr::cli
