// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. run_cli() is the whole program minus process exit,
// so the suites can drive it in-process.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vortexcorr/state_kind.hpp"

namespace vortexcorr::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kConfigError = 2,
  kNumericalError = 3,
  kWrongTool = 4,
};

struct RunConfig {
  std::string command;
  std::string state = "fermi-fock";
  std::optional<int> n, m;
  std::optional<std::string> alpha_x, alpha_y, alpha_a, alpha_b;
  std::optional<double> nbar, nbar_a, nbar_b;
  std::optional<std::string> basis;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1000;
  int points = 0;  ///< 0 picks the per-command default
  double spacing = 0.05;
  int resolution = 61;
  int bins = 80;
  bool two_angle = false;
  bool stats = false;
  int threads = 0;  ///< 0 uses every hardware thread
  std::string out = ".";
  std::vector<std::string> formats = {"csv", "json", "svg"};
};

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" (j accepted for i).
Complex parse_complex(const std::string& text);

/// Applies a JSON config document (keys are the long flag names) on top of
/// `cfg`. Throws ConfigError on unknown keys or wrong types.
void apply_config_json(RunConfig& cfg, const nlohmann::json& doc);

StateKind build_kind(const RunConfig& cfg);

/// Fields that determine the numerical output; hashed into every file.
nlohmann::json canonical_config(const RunConfig& cfg);

/// argv without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vortexcorr::cli
