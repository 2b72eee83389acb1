// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "vortexcorr/error.hpp"

namespace vortexcorr {
namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double x) { return fmt::format("{:.2f}", x); }

std::string tick(double x) { return fmt::format("{:.3g}", x); }

struct PlotArea {
  double x0, x1, y0, y1;
  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

std::string open_doc(const std::string& title) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">{3}</text>\n",
      num(kWidth), num(kHeight), num(kWidth / 2), esc(title));
}

std::string axes(const PlotArea& f, const std::string& xlabel, const std::string& ylabel) {
  std::string s = fmt::format(
      "<g stroke=\"black\" stroke-width=\"1\"><line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>"
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{3}\"/></g>\n",
      num(kLeft), num(kHeight - kBottom), num(kWidth - kRight), num(kTop));
  s += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = f.x0 + (f.x1 - f.x0) * i / 4, y = f.y0 + (f.y1 - f.y0) * i / 4;
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", num(f.px(x)),
                     num(kHeight - kBottom + 16), tick(x));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", num(kLeft - 6), num(f.py(y) + 4),
                     tick(y));
  }
  s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", num((kLeft + kWidth - kRight) / 2),
                   num(kHeight - 12), esc(xlabel));
  if (!ylabel.empty()) {
    s += fmt::format("<text x=\"16\" y=\"{0}\" transform=\"rotate(-90 16 {0})\" text-anchor=\"middle\">{1}</text>\n",
                     num((kTop + kHeight - kBottom) / 2), esc(ylabel));
  }
  return s + "</g>\n";
}

std::string polyline(const PlotArea& f, const SvgSeries& s) {
  std::string pts;
  for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
    if (!pts.empty()) pts += ' ';
    pts += num(f.px(s.x[i])) + "," + num(f.py(s.y[i]));
  }
  return fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n", s.colour,
                     s.dashed ? " stroke-dasharray=\"5,3\"" : "", pts);
}

std::string legend(const std::vector<SvgSeries>& series) {
  std::string s;
  double y = kTop + 10;
  for (const auto& ser : series) {
    if (ser.label.empty()) continue;
    s += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"{4}/>"
        "<text x=\"{5}\" y=\"{6}\" font-family=\"sans-serif\" font-size=\"11\">{7}</text>\n",
        num(kWidth - 190), num(y), num(kWidth - 165), ser.colour, ser.dashed ? " stroke-dasharray=\"5,3\"" : "",
        num(kWidth - 160), num(y + 4), esc(ser.label));
    y += 16;
  }
  return s;
}

double top_of(const std::vector<SvgSeries>& series, double floor) {
  double top = floor;
  for (const auto& s : series)
    for (double v : s.y)
      if (std::isfinite(v)) top = std::max(top, v);
  return top > 0 ? top * 1.05 : 1.0;
}

// Five-stop perceptual map, dark to light.
std::string colour(double t) {
  static const double stops[5][3] = {
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0) * 4;
  const int i = std::min(int(t), 3);
  const double u = t - i;
  int rgb[3];
  for (int c = 0; c < 3; ++c) rgb[c] = int(std::lround(stops[i][c] + u * (stops[i + 1][c] - stops[i][c])));
  return fmt::format("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2]);
}

void to_little_endian(double v, char* out) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out[i] = char((bits >> (8 * i)) & 0xff);
}

double from_little_endian(const char* in) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(static_cast<unsigned char>(in[i])) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const nlohmann::json& config) { return fmt::format("{:016x}", fnv1a64(config.dump())); }

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

nlohmann::json Provenance::to_json() const {
  nlohmann::json j = {{"tool", "vortexcorr"}, {"tool_version", tool_version}, {"config_hash", config_hash}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["quadrature"] = quadrature;
  return j;
}

std::string Provenance::comment_line() const {
  return fmt::format("# vortexcorr {} config={} seed={} quadrature={}", tool_version, config_hash,
                     seed ? std::to_string(*seed) : "none", quadrature.is_null() ? "none" : quadrature.dump());
}

void write_csv(std::ostream& out, const Provenance& prov, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "{}\n{}\n", prov.comment_line(), fmt::join(columns, ","));
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) buf.push_back(',');
      fmt::format_to(std::back_inserter(buf), "{:.17g}", row[i]);
    }
    buf.push_back('\n');
  }
  out.write(buf.data(), std::streamsize(buf.size()));
}

void write_binary(std::ostream& out, const BinaryArray& array, const Provenance& prov) {
  std::size_t count = 1;
  for (auto s : array.shape) count *= s;
  if (count != array.values.size()) throw ConfigError("binary array shape does not match its values");
  nlohmann::json header = array.header.is_object() ? array.header : nlohmann::json::object();
  header["format"] = "vortexcorr-array";
  header["dtype"] = "float64";
  header["byte_order"] = "little";
  header["shape"] = array.shape;
  header["provenance"] = prov.to_json();
  out << header.dump() << '\n';
  std::vector<char> bytes(8 * count);
  for (std::size_t i = 0; i < count; ++i) to_little_endian(array.values[i], bytes.data() + 8 * i);
  out.write(bytes.data(), std::streamsize(bytes.size()));
}

BinaryArray read_binary(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("binary array file is empty");
  BinaryArray out;
  try {
    out.header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("binary array header is not JSON: {}", e.what()));
  }
  if (out.header.value("format", "") != "vortexcorr-array" || out.header.value("dtype", "") != "float64" ||
      out.header.value("byte_order", "") != "little") {
    throw ConfigError("unsupported binary array header");
  }
  out.shape = out.header.at("shape").get<std::vector<std::size_t>>();
  std::size_t count = 1;
  for (auto s : out.shape) count *= s;
  std::vector<char> bytes(8 * count);
  if (!in.read(bytes.data(), std::streamsize(bytes.size()))) throw ConfigError("binary array is truncated");
  out.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) out.values[i] = from_little_endian(bytes.data() + 8 * i);
  return out;
}

std::string svg_lines(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                      const std::vector<SvgSeries>& series) {
  double x0 = 0, x1 = 1;
  bool first = true;
  for (const auto& s : series)
    for (double x : s.x) {
      x0 = first ? x : std::min(x0, x);
      x1 = first ? x : std::max(x1, x);
      first = false;
    }
  if (x1 <= x0) x1 = x0 + 1;
  const PlotArea f{x0, x1, 0.0, top_of(series, 0.0)};
  std::string doc = open_doc(title) + axes(f, xlabel, ylabel);
  for (const auto& s : series) doc += polyline(f, s);
  return doc + legend(series) + "</svg>\n";
}

std::string svg_bars(const std::string& title, const std::string& xlabel, double lo, double hi,
                     const std::vector<double>& heights, const std::vector<SvgSeries>& overlay) {
  double top = 0;
  for (double h : heights) top = std::max(top, h);
  const PlotArea f{lo, hi, 0.0, top_of(overlay, top * 1.0)};
  std::string doc = open_doc(title) + axes(f, xlabel, "density");
  const double w = (hi - lo) / double(std::max<std::size_t>(heights.size(), 1));
  doc += "<g fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const double a = lo + double(i) * w;
    doc += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>\n", num(f.px(a)), num(f.py(heights[i])),
                       num(f.px(a + w) - f.px(a)), num(f.py(0) - f.py(heights[i])));
  }
  doc += "</g>\n";
  for (const auto& s : overlay) doc += polyline(f, s);
  return doc + legend(overlay) + "</svg>\n";
}

std::string svg_heatmap(const std::string& title, const std::vector<double>& values, std::size_t nx, std::size_t ny,
                        double x0, double x1, double y0, double y1) {
  if (values.size() != nx * ny || nx == 0 || ny == 0) throw ConfigError("heat map shape does not match its values");
  double lo = values[0], hi = values[0];
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  // Square plotting area.
  const double side = kHeight - kTop - kBottom;
  const double cw = side / double(nx), ch = side / double(ny);
  std::string doc = open_doc(title);
  doc += "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t iy = 0; iy < ny; ++iy)
    for (std::size_t ix = 0; ix < nx; ++ix) {
      doc += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                         num(kLeft + double(ix) * cw), num(kTop + double(ny - 1 - iy) * ch), num(cw + 0.01),
                         num(ch + 0.01), colour((values[iy * nx + ix] - lo) / span));
    }
  doc += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double tx = x0 + (x1 - x0) * i / 4, ty = y0 + (y1 - y0) * i / 4;
    doc += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", num(kLeft + side * i / 4),
                       num(kTop + side + 16), tick(tx));
    doc += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", num(kLeft - 6),
                       num(kTop + side - side * i / 4 + 4), tick(ty));
  }
  // Colour bar.
  const double bx = kLeft + side + 30;
  for (int i = 0; i < 50; ++i) {
    doc += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"14\" height=\"{}\" fill=\"{}\"/>\n", num(bx),
                       num(kTop + side - (i + 1) * side / 50), num(side / 50 + 0.01), colour((i + 0.5) / 50));
  }
  doc += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n<text x=\"{}\" y=\"{}\">{}</text>\n", num(bx + 18),
                     num(kTop + side), tick(lo), num(bx + 18), num(kTop + 8), tick(hi));
  return doc + "</g>\n</svg>\n";
}

}  // namespace vortexcorr
