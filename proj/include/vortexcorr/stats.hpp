// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

namespace vortexcorr {

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> counts;
  double total = 0.0;  ///< all samples offered, in range or not

  double width() const { return (hi - lo) / double(counts.size()); }
  double centre(std::size_t i) const { return lo + (double(i) + 0.5) * width(); }
  /// counts / (total · width)
  std::vector<double> density() const;
};

Histogram make_histogram(const std::vector<double>& samples, double lo, double hi, int bins);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 0.0;
  int bins_used = 0;
};

/// Pearson goodness of fit of a histogram against a density on [lo, hi).
/// Expected counts integrate the density over each bin with a 16-point
/// Gauss–Legendre rule; neighbouring bins are merged until each expects at
/// least 5 counts. Out-of-range samples are dropped and the expectation is
/// renormalized to the in-range mass.
ChiSquareResult chi_square_test(const Histogram& hist, const std::function<double(double)>& density);

struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;
  double standard_error = 0.0;
};

SampleMoments sample_moments(const std::vector<double>& samples);

}  // namespace vortexcorr
