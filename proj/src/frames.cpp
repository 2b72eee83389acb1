// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/frames.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/math/special_functions/lambert_w.hpp>
#include <fmt/format.h>

#include "vortexcorr/error.hpp"
#include "vortexcorr/parallel.hpp"

namespace vortexcorr {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxProposals = 1 << 20;

// Survival (1 + t) e^{-t} at the truncation radius.
const double kTailSurvival = (1.0 + kDomainHalfWidth * kDomainHalfWidth) *
                             std::exp(-kDomainHalfWidth * kDomainHalfWidth);

double fold_pi(double a) {
  a = std::fmod(a, std::numbers::pi);
  return a < 0.0 ? a + std::numbers::pi : a;
}

EmpiricalPairStats finish(std::vector<double> distances, std::vector<double> angles, int bins) {
  EmpiricalPairStats out;
  out.distance = make_histogram(distances, 0.0, 8.0, bins);
  out.angle = make_histogram(angles, 0.0, std::numbers::pi, bins);
  out.distances = std::move(distances);
  out.angles = std::move(angles);
  return out;
}

void push_pair(const Point2D& a, const Point2D& b, std::vector<double>& d, std::vector<double>& t) {
  d.push_back(std::hypot(a.x - b.x, a.y - b.y));
  t.push_back(fold_pi(b.theta() - a.theta()));
}

void require_frames(const FrameSet& frames) {
  if (frames.frames.empty()) throw EmptyFrames("frame set is empty");
}

}  // namespace

double radial_cdf(double r) {
  const double t = r * r;
  return -std::expm1(-t) - t * std::exp(-t);
}

double sample_radius(double u) {
  // Survival v = (1 + t) e^{-t}, t = r²; inverted through the lower branch of
  // Lambert W: t = -1 - W₋₁(-v/e).
  const double v = (1.0 - u) + u * kTailSurvival;
  if (v >= 1.0) return 0.0;
  double t = -1.0 - boost::math::lambert_wm1(-v * std::exp(-1.0));
  // One Newton step on the survival restores digits lost near the branch point.
  if (t > 1e-6) t -= ((1.0 + t) * std::exp(-t) - v) / (-t * std::exp(-t));
  return std::sqrt(std::max(t, 0.0));
}

PairSampler::PairSampler(const QuantumState& state) : corr_(vortex_correlators(state)) {
  const double n2 = corr_.pair_weight();
  if (!(n2 > 1e-14)) throw NoPairs("state has no pairs to sample");
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp)
      for (int qp = 0; qp < 2; ++qp)
        for (int q = 0; q < 2; ++q) majorant_ += std::abs(corr_.second(p, pp, qp, q));
  acceptance_ = n2 / majorant_;
  if (acceptance_ < kMinAcceptance) {
    throw MethodError(fmt::format("angular rejection acceptance {:.3g} is below {}", acceptance_, kMinAcceptance));
  }
}

double PairSampler::angular_factor(double theta, double vartheta) const {
  const Complex g[2] = {std::polar(1.0, theta), std::polar(1.0, -theta)};
  const Complex h[2] = {std::polar(1.0, vartheta), std::polar(1.0, -vartheta)};
  Complex sum = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp)
      for (int qp = 0; qp < 2; ++qp)
        for (int q = 0; q < 2; ++q) sum += corr_.second(p, pp, qp, q) * std::conj(g[p] * h[pp]) * g[q] * h[qp];
  return sum.real();
}

std::pair<Point2D, Point2D> PairSampler::sample(CounterStream& stream, int& proposals) const {
  const double r = sample_radius(stream.uniform());
  const double s = sample_radius(stream.uniform());
  for (proposals = 1; proposals <= kMaxProposals; ++proposals) {
    const double theta = kTwoPi * stream.uniform();
    const double vartheta = kTwoPi * stream.uniform();
    if (stream.uniform() * majorant_ < angular_factor(theta, vartheta)) {
      return {Point2D::polar(r, theta), Point2D::polar(s, vartheta)};
    }
  }
  throw MethodError("angular rejection did not accept within the proposal budget");
}

std::pair<Point2D, Point2D> PairSampler::operator()(CounterStream& stream) const {
  int proposals = 0;
  return sample(stream, proposals);
}

std::pair<Point2D, Point2D> sample_pair(const QuantumState& state, CounterStream& stream) {
  return PairSampler(state)(stream);
}

FrameSet generate_frames(const QuantumState& state, std::size_t count, std::uint64_t seed, int threads,
                         nlohmann::json descriptor) {
  FrameSet out;
  out.descriptor = std::move(descriptor);
  out.seed = seed;
  out.generator_version = VORTEXCORR_VERSION;
  if (count == 0) return out;
  const PairSampler sampler(state);
  out.frames.resize(count);
  std::vector<int> proposals(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    CounterStream stream(seed, i);
    const auto [a, b] = sampler.sample(stream, proposals[i]);
    out.frames[i] = Frame{{a, b}, i, i};
  });
  double total = 0.0;
  for (int p : proposals) total += p;
  out.acceptance_rate = double(count) / total;
  return out;
}

ProfileHistogram empirical_profile(const FrameSet& frames, int bins) {
  require_frames(frames);
  if (bins < 1) throw ConfigError("bins must be positive");
  ProfileHistogram h;
  h.bins = bins;
  h.counts.assign(std::size_t(bins) * bins, 0.0);
  for (const auto& f : frames.frames)
    for (const auto& p : f.points) {
      h.total += 1.0;
      const int ix = int(std::floor((p.x - h.lo) / h.width()));
      const int iy = int(std::floor((p.y - h.lo) / h.width()));
      if (ix < 0 || iy < 0 || ix >= bins || iy >= bins) continue;
      h.counts[std::size_t(iy) * bins + ix] += 1.0;
    }
  return h;
}

Histogram empirical_radial(const FrameSet& frames, int bins) {
  require_frames(frames);
  std::vector<double> r;
  for (const auto& f : frames.frames)
    for (const auto& p : f.points) r.push_back(p.r());
  return make_histogram(r, 0.0, kDomainHalfWidth, bins);
}

EmpiricalPairStats empirical_pair_stats(const FrameSet& frames, int bins) {
  require_frames(frames);
  std::vector<double> d, t;
  for (const auto& f : frames.frames) {
    if (f.points.size() < 2) continue;
    push_pair(f.points[0], f.points[1], d, t);
  }
  return finish(std::move(d), std::move(t), bins);
}

EmpiricalPairStats mismatched_pair_stats(const FrameSet& frames, int bins) {
  require_frames(frames);
  if (frames.frames.size() < 2) throw EmptyFrames("mismatched pairs need at least two frames");
  std::vector<double> d, t;
  for (std::size_t i = 0; i + 1 < frames.frames.size(); ++i)
    push_pair(frames.frames[i].points.front(), frames.frames[i + 1].points.back(), d, t);
  return finish(std::move(d), std::move(t), bins);
}

void write_frames(std::ostream& out, const FrameSet& frames, const nlohmann::json& provenance) {
  nlohmann::json header = {
      {"format", "vortexcorr-frames"},
      {"format_version", 1},
      {"generator_version", frames.generator_version},
      {"state", frames.descriptor},
      {"seed", frames.seed},
      {"count", frames.frames.size()},
      {"method", frames.method},
      {"acceptance_rate", frames.acceptance_rate},
  };
  if (!provenance.is_null()) header["provenance"] = provenance;
  out << header.dump() << '\n' << "frame_index,x1,y1,x2,y2\n";
  fmt::memory_buffer buf;
  for (const auto& f : frames.frames) {
    fmt::format_to(std::back_inserter(buf), "{}", f.frame_index);
    for (const auto& p : f.points) fmt::format_to(std::back_inserter(buf), ",{:.17g},{:.17g}", p.x, p.y);
    buf.push_back('\n');
  }
  out.write(buf.data(), std::streamsize(buf.size()));
}

FrameSet read_frames(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("frames file is empty");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("frames header is not JSON: {}", e.what()));
  }
  if (header.value("format", "") != "vortexcorr-frames") throw ConfigError("not a frames file");
  FrameSet out;
  out.descriptor = header.value("state", nlohmann::json());
  out.seed = header.at("seed").get<std::uint64_t>();
  out.method = header.value("method", "");
  out.acceptance_rate = header.value("acceptance_rate", 0.0);
  out.generator_version = header.value("generator_version", "");
  if (!std::getline(in, line) || line != "frame_index,x1,y1,x2,y2") throw ConfigError("frames CSV header missing");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> v;
    Frame f;
    if (!std::getline(row, cell, ',')) throw ConfigError("malformed frame row");
    f.frame_index = f.rng_stream_id = std::stoull(cell);
    while (std::getline(row, cell, ',')) v.push_back(std::stod(cell));
    if (v.size() != 4) throw ConfigError(fmt::format("frame {} has {} coordinates", f.frame_index, v.size()));
    f.points = {{v[0], v[1]}, {v[2], v[3]}};
    out.frames.push_back(std::move(f));
  }
  if (out.frames.size() != header.at("count").get<std::size_t>()) throw ConfigError("frame count mismatch");
  return out;
}

}  // namespace vortexcorr
