// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pair_stats.hpp
 * @brief Distance and angle distributions of detected particle pairs.
 *
 *   D(d)    = ⟨:N̂²:⟩⁻¹ ∫ ρ⁽²⁾(r, r') δ(|r - r'| - d)
 *   D(Δθ)   = ⟨:N̂²:⟩⁻¹ ∫ ρ⁽²⁾ δ(ϑ' - ϑ - Δθ)            folded to [0, π)
 *   D(θ, ϑ) = ⟨:N̂²:⟩⁻¹ ∫ ρ⁽²⁾ r dr s ds
 *
 * Deltas are resolved by a change of variables, never by binning. For D(d)
 * the pair is written as R ± d ê(φ)/2; the Gaussian in R is handled by
 * Gauss–Hermite and φ by the periodic trapezoid. Both rules are exact for the
 * two-mode densities handled here, whose prefactor is a polynomial of degree
 * four in the coordinates.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vortexcorr/density.hpp"
#include "vortexcorr/fock.hpp"
#include "vortexcorr/state_kind.hpp"

namespace vortexcorr {

enum class PairVariable { Distance, RelAngle, TwoAngle };

std::string to_string(PairVariable v);

inline constexpr double kMaxDistance = 8.0;
inline constexpr int kDefaultDistancePoints = 801;
inline constexpr int kDefaultAnglePoints = 180;
inline constexpr int kDefaultTwoAnglePoints = 72;

/// Orders of the fixed rules behind every quadrature distribution.
struct PairQuadrature {
  int hermite = 6;    ///< centre of mass, per axis
  int azimuth = 12;   ///< direction of the separation
  int radial = 24;    ///< Gauss–Legendre on [0, 6] per radius
  int angle = 12;     ///< absolute angle for the relative-angle law
};

/// A normalized pair law, tabulated on a uniform grid.
///
/// Distance: x_i = 8 i / (n - 1), i < n.
/// RelAngle: x_i = π i / n (periodic, the point π is x_0 again).
/// TwoAngle: θ_i = ϑ_i = 2π i / n, values[i * n + j] = D(θ_i, ϑ_j).
struct PairDistribution {
  PairVariable variable = PairVariable::Distance;
  int points = 0;
  std::vector<double> values;
  /// Exact pointwise law for one-dimensional variables; empty for tables
  /// that only exist as histograms.
  std::function<double(double)> evaluate;
  /// Integral of the table (or of `evaluate` when present).
  double normalization = 0.0;
  int quadrature_order = 0;
  std::vector<std::string> flags;

  double x(int i) const;
  double step() const;
  double upper() const;
  /// evaluate(x) when available, else linear interpolation of the table.
  double at(double x) const;
};

/// Tabulated D(d) on [0, 8]. Throws NoPairs when ⟨:N̂²:⟩ vanishes.
PairDistribution distance_distribution(const QuantumState& state, int n_points = kDefaultDistancePoints,
                                       int threads = 1, PairQuadrature rule = {});

/// Relative-angle law. Throws AnisotropicState for states whose pair density
/// changes under joint rotations.
PairDistribution angle_distribution(const QuantumState& state, int n_points = kDefaultAnglePoints, int threads = 1,
                                    PairQuadrature rule = {});

/// Joint angle law on [0, 2π)².
PairDistribution two_angle_distribution(const QuantumState& state, int n_points = kDefaultTwoAnglePoints,
                                        int threads = 1, PairQuadrature rule = {});

/// True when every normally ordered correlator conserves total angular
/// momentum, the condition for D(Δθ) to be well defined.
bool rotation_invariant(const QuantumState& state);

/// Analytic D(d) for FermiFock(1,1), BoseFock(1,1) vortex, Coherent (any),
/// Noon / BoseFock(1,1) dipole (equal to the coherent law) and equal-occupation
/// Thermal. `Printed` drops the leading factor d of the bosonic form.
double closed_form_distance(const StateKind& kind, double d, FormVariant variant = FormVariant::Corrected);

/// Analytic D(Δθ) on [0, π). `Printed` swaps the fermionic and bosonic laws.
double closed_form_angle(const StateKind& kind, double dtheta, FormVariant variant = FormVariant::Corrected);

/// Closed form tabulated like distance_distribution.
PairDistribution closed_form_distribution(const StateKind& kind, FormVariant variant = FormVariant::Corrected,
                                          int n_points = kDefaultDistancePoints);

struct DistSummary {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  std::vector<double> local_maxima;
  std::function<double(double)> value_at;
};

/// Moments by quadrature and interior maxima by a 1e-3 scan refined by
/// bisection on the derivative. Distance laws only.
DistSummary summarize(const PairDistribution& dist);

/// One-particle radial law p(r) = r ∫ ρ⁽¹⁾ dθ / ⟨N̂⟩ on [0, 6].
struct RadialDensity {
  std::vector<double> r;
  std::vector<double> p;
};

RadialDensity radial_marginal(const QuantumState& state, int n_points = 601);

/// Draws from a non-negative piecewise-linear density by exact inversion of
/// its piecewise-quadratic CDF.
class PiecewiseLinearSampler {
 public:
  PiecewiseLinearSampler(std::vector<double> x, std::vector<double> f);
  double operator()(double u) const;

 private:
  std::vector<double> x_, f_, cdf_;
};

/// d = √(R₁² + R₂² - 2 R₁ R₂ cos Θ) with R₁, R₂ from `radial` and Θ from the
/// folded relative-angle law, unfolded by a fair choice of Θ or Θ + π.
/// Sample i depends on (seed, i) only.
std::vector<double> compose_distance_samples(const RadialDensity& radial, const PairDistribution& angular,
                                             std::size_t n, std::uint64_t seed);

}  // namespace vortexcorr
