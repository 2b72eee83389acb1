// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief CSV, binary field and SVG writers plus run provenance.
 *
 * Floats are written with 17 significant digits so that every value round
 * trips exactly. Output of every writer is a pure function of its inputs.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace vortexcorr {

/// 64-bit FNV-1a of `data`.
std::uint64_t fnv1a64(std::string_view data);

/// Lower-case 16-digit hex of fnv1a64(config.dump()).
std::string config_hash(const nlohmann::json& config);

/// `{:.17g}`
std::string format_double(double x);

struct Provenance {
  std::string tool_version = VORTEXCORR_VERSION;
  std::string config_hash;
  std::optional<std::uint64_t> seed;
  nlohmann::json quadrature;  ///< rule orders used for the output, or null

  nlohmann::json to_json() const;
  /// `# vortexcorr <version> config=<hash> seed=<seed|none> quadrature=<json>`
  std::string comment_line() const;
};

/// Provenance comment, header row, then rows of doubles.
void write_csv(std::ostream& out, const Provenance& prov, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

/// A dense row-major float64 array with a JSON header.
struct BinaryArray {
  nlohmann::json header;          ///< free-form metadata merged into the file header
  std::vector<std::size_t> shape;
  std::vector<double> values;
};

/// One line of JSON (with "format", "dtype": "float64", "byte_order":
/// "little", "shape" and "provenance"), a newline, then the raw values in
/// little-endian byte order.
void write_binary(std::ostream& out, const BinaryArray& array, const Provenance& prov);
BinaryArray read_binary(std::istream& in);

// Minimal SVG documents. Numbers are printed with fixed precision so output is
// byte-stable.

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string colour = "#1f77b4";
  bool dashed = false;
};

/// Line plot with axes, tick labels and a legend.
std::string svg_lines(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                      const std::vector<SvgSeries>& series);

/// Histogram bars on [lo, hi) with optional overlay curves.
std::string svg_bars(const std::string& title, const std::string& xlabel, double lo, double hi,
                     const std::vector<double>& heights, const std::vector<SvgSeries>& overlay = {});

/// Heat map of a row-major ny × nx array over [x0, x1] × [y0, y1]; row 0 is
/// the bottom edge.
std::string svg_heatmap(const std::string& title, const std::vector<double>& values, std::size_t nx, std::size_t ny,
                        double x0, double x1, double y0, double y1);

}  // namespace vortexcorr
