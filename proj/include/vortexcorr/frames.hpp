// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file frames.hpp
 * @brief Single-shot two-particle frames drawn from ρ⁽²⁾ / ⟨:N̂²:⟩.
 *
 * Every state of the two vortex modes factorizes as
 *   ρ⁽²⁾ = r² s² exp(-r² - s²) A(θ, ϑ) / π²,
 * so radii are drawn exactly from p(r) = 2 r³ exp(-r²) and the angle pair by
 * rejection against the constant majorant Σ |⟨a†a†aa⟩| of A. States with a
 * number spread (coherent, thermal) are sampled conditioned on a pair.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <utility>
#include <vector>

#include "vortexcorr/fock.hpp"
#include "vortexcorr/modes.hpp"
#include "vortexcorr/rng.hpp"
#include "vortexcorr/stats.hpp"

namespace vortexcorr {

inline constexpr double kMinAcceptance = 0.01;
inline constexpr const char* kFrameMethod = "inverse-cdf-radius/rejection-angles";

/// Radius with density 2 r³ exp(-r²) truncated to [0, 6]; u in (0, 1).
double sample_radius(double u);

/// CDF 1 - (1 + r²) exp(-r²) of the untruncated radial law.
double radial_cdf(double r);

class PairSampler {
 public:
  /// Throws NoPairs for ⟨:N̂²:⟩ = 0 and MethodError when the expected
  /// acceptance of the angular step is below 1%.
  explicit PairSampler(const QuantumState& state);

  std::pair<Point2D, Point2D> operator()(CounterStream& stream) const;
  /// Same draw, also reporting the number of angle proposals used.
  std::pair<Point2D, Point2D> sample(CounterStream& stream, int& proposals) const;

  /// A(θ, ϑ) normalized so that its torus average is ⟨:N̂²:⟩.
  double angular_factor(double theta, double vartheta) const;
  double majorant() const noexcept { return majorant_; }
  double expected_acceptance() const noexcept { return acceptance_; }

 private:
  CorrelatorSet corr_;
  double majorant_ = 0.0;
  double acceptance_ = 0.0;
};

std::pair<Point2D, Point2D> sample_pair(const QuantumState& state, CounterStream& stream);

struct Frame {
  std::vector<Point2D> points;
  std::uint64_t frame_index = 0;
  std::uint64_t rng_stream_id = 0;
};

struct FrameSet {
  nlohmann::json descriptor;
  std::uint64_t seed = 0;
  std::vector<Frame> frames;
  std::string method = kFrameMethod;
  double acceptance_rate = 0.0;  ///< measured accepted / proposed
  std::string generator_version;
};

/// Frame i is drawn from CounterStream(seed, i) alone, so the output does not
/// depend on `threads`.
FrameSet generate_frames(const QuantumState& state, std::size_t count, std::uint64_t seed, int threads = 1,
                         nlohmann::json descriptor = nullptr);

/// Pooled 2D histogram of every detected point on [-6, 6]², normalized to a
/// probability density. Index iy * bins + ix.
struct ProfileHistogram {
  int bins = 0;
  double lo = -kDomainHalfWidth;
  double hi = kDomainHalfWidth;
  std::vector<double> counts;
  double total = 0.0;

  double width() const { return (hi - lo) / bins; }
  double centre(int i) const { return lo + (i + 0.5) * width(); }
  double density(int ix, int iy) const { return counts[std::size_t(iy) * bins + ix] / (total * width() * width()); }
};

ProfileHistogram empirical_profile(const FrameSet& frames, int bins);

/// Radial histogram of pooled points on [0, 6).
Histogram empirical_radial(const FrameSet& frames, int bins);

struct EmpiricalPairStats {
  std::vector<double> distances;
  std::vector<double> angles;  ///< relative angle folded to [0, π)
  Histogram distance;          ///< [0, 8)
  Histogram angle;             ///< [0, π)
};

/// Pair statistics computed within each frame.
EmpiricalPairStats empirical_pair_stats(const FrameSet& frames, int bins);

/// Pairs formed across frames (first point of frame i with the second point
/// of frame i + 1), which carry no exchange correlation.
EmpiricalPairStats mismatched_pair_stats(const FrameSet& frames, int bins);

/// Header line of JSON, then CSV `frame_index,x1,y1,x2,y2`.
void write_frames(std::ostream& out, const FrameSet& frames, const nlohmann::json& provenance = nullptr);
FrameSet read_frames(std::istream& in);

}  // namespace vortexcorr
