// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/stats.hpp"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "vortexcorr/error.hpp"
#include "vortexcorr/quadrature.hpp"

namespace vortexcorr {

std::vector<double> Histogram::density() const {
  std::vector<double> out(counts.size(), 0.0);
  if (total <= 0.0) return out;
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = counts[i] / (total * width());
  return out;
}

Histogram make_histogram(const std::vector<double>& samples, double lo, double hi, int bins) {
  if (bins < 1 || !(hi > lo)) throw ConfigError("histogram needs bins >= 1 and hi > lo");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(std::size_t(bins), 0.0);
  const double scale = bins / (hi - lo);
  for (double x : samples) {
    h.total += 1.0;
    if (!(x >= lo && x < hi)) continue;
    const auto i = std::min<std::size_t>(std::size_t((x - lo) * scale), std::size_t(bins) - 1);
    h.counts[i] += 1.0;
  }
  return h;
}

ChiSquareResult chi_square_test(const Histogram& hist, const std::function<double(double)>& density) {
  const auto rule = gauss_legendre(16, 0.0, 1.0);
  const std::size_t n = hist.counts.size();
  std::vector<double> mass(n, 0.0);
  double total_mass = 0.0, observed = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = hist.lo + double(i) * hist.width();
    for (std::size_t k = 0; k < rule.size(); ++k) mass[i] += rule.weights[k] * density(a + rule.nodes[k] * hist.width());
    mass[i] *= hist.width();
    total_mass += mass[i];
    observed += hist.counts[i];
  }
  if (!(total_mass > 0.0) || observed <= 0.0) throw NumericalError("chi-square test needs mass and samples");

  // Cells of (expected, observed), each expecting at least 5 counts; a short
  // tail joins the last cell.
  std::vector<std::pair<double, double>> cells;
  double exp_acc = 0.0, obs_acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    exp_acc += observed * mass[i] / total_mass;
    obs_acc += hist.counts[i];
    if (exp_acc >= 5.0) {
      cells.emplace_back(exp_acc, obs_acc);
      exp_acc = obs_acc = 0.0;
    }
  }
  if (exp_acc > 0.0 || obs_acc > 0.0) {
    if (cells.empty()) {
      cells.emplace_back(exp_acc, obs_acc);
    } else {
      cells.back().first += exp_acc;
      cells.back().second += obs_acc;
    }
  }
  ChiSquareResult out;
  for (const auto& [e, o] : cells)
    if (e > 0.0) out.statistic += (o - e) * (o - e) / e;
  out.bins_used = int(cells.size());
  out.dof = std::max(out.bins_used - 1, 1);
  boost::math::chi_squared_distribution<double> dist(out.dof);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

SampleMoments sample_moments(const std::vector<double>& samples) {
  SampleMoments m;
  if (samples.empty()) return m;
  // Welford
  double mean = 0.0, m2 = 0.0;
  std::size_t k = 0;
  for (double x : samples) {
    ++k;
    const double delta = x - mean;
    mean += delta / double(k);
    m2 += delta * (x - mean);
  }
  m.mean = mean;
  m.variance = k > 1 ? m2 / double(k - 1) : 0.0;
  m.standard_error = std::sqrt(m.variance / double(k));
  return m;
}

}  // namespace vortexcorr
