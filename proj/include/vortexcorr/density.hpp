// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file density.hpp
 * @brief Reduced one- and two-particle densities.
 *
 *   ρ⁽¹⁾(x)     = Σ_{p,q} ⟨a†_p a_q⟩ φ*_p(x) φ_q(x)
 *   ρ⁽²⁾(x, x') = Σ ⟨a†_p a†_p' a_q' a_q⟩ φ*_p(x) φ*_p'(x') φ_q(x) φ_q'(x')
 *
 * Both are densities with respect to Cartesian measure; polar Jacobians are
 * applied only inside integration routines.
 */

#pragma once

#include <array>
#include <vector>

#include "vortexcorr/fock.hpp"
#include "vortexcorr/state_kind.hpp"

namespace vortexcorr {

/// Grid spacing of cached fields: 241 × 241 points on [-6, 6]².
inline constexpr double kFieldSpacing = 0.05;

/// Mode amplitudes (φ_a(p), φ_b(p)) of a basis.
std::array<Complex, 2> mode_values(Basis basis, Point2D p);

/// Correlators bound to the mode pair they refer to.
class TwoModeField {
 public:
  explicit TwoModeField(const QuantumState& state);
  TwoModeField(const CorrelatorSet& correlators, Basis basis);

  double rho1(Point2D p) const;
  double rho2(Point2D p, Point2D q) const;

  /// Contractions on precomputed mode values; no imaginary-part check.
  Complex rho1_raw(const std::array<Complex, 2>& fp) const;
  Complex rho2_raw(const std::array<Complex, 2>& fp, const std::array<Complex, 2>& fq) const;

  const CorrelatorSet& correlators() const noexcept { return corr_; }
  Basis basis() const noexcept { return basis_; }
  double mean_number() const { return corr_.mean_number(); }
  double pair_weight() const { return corr_.pair_weight(); }

 private:
  CorrelatorSet corr_;
  Basis basis_;
};

/// ρ⁽¹⁾ of `state` at p. Throws AlgebraInconsistency on an imaginary residue
/// above 1e-12.
double rho1(const QuantumState& state, Point2D p);
double rho2(const QuantumState& state, Point2D p, Point2D q);

enum class FormVariant {
  Printed,    ///< formulas exactly as published
  Corrected,  ///< engine-consistent forms
};

/// One-particle closed forms for FermiFock, BoseFock, Coherent and Thermal.
/// Throws ConfigError for kinds without a closed form.
double rho1_closed(const StateKind& kind, Point2D p);

/// Two-particle closed forms. The printed variant reproduces the published
/// pairing of same-label products; the corrected variant follows the
/// second-quantized algebra.
double rho2_closed(const StateKind& kind, Point2D p, Point2D q, FormVariant variant = FormVariant::Printed);

/// Angular factor D(θ, ϑ) of the polar factorization
///   ρ⁽²⁾ = 2 r² s² exp(-r² - s²) D(θ, ϑ) / π²
/// for FermiFock, BoseFock (vortex, or dipole (1,1)), Coherent, Thermal
/// (vortex, or equal occupations) and Noon kinds.
double polar_angular_factor(const StateKind& kind, double theta, double vartheta);

double rho2_polar(const StateKind& kind, double r, double s, double theta, double vartheta);

struct DensityField1 {
  double origin = -kDomainHalfWidth;
  double spacing = kFieldSpacing;
  int points = 241;            ///< per axis
  std::vector<double> values;  ///< index iy * points + ix
  double total = 0.0;          ///< trapezoidal integral

  double x(int ix) const { return origin + ix * spacing; }
  double y(int iy) const { return origin + iy * spacing; }
  double at(int ix, int iy) const { return values[std::size_t(iy) * points + ix]; }
};

/// Tabulates ρ⁽¹⁾ on the regular grid over [-6, 6]².
DensityField1 density_field1(const QuantumState& state, double spacing = kFieldSpacing);

/// Two-particle density as an exact evaluator plus an optional coarse cache.
class DensityField2 {
 public:
  explicit DensityField2(const QuantumState& state);

  double operator()(Point2D p, Point2D q) const { return field_.rho2(p, q); }
  /// ⟨:N̂²:⟩
  double normalization() const { return field_.pair_weight(); }
  const TwoModeField& field() const noexcept { return field_; }

  /// Fills the n⁴ tensor on the lattice origin + k·(12/(n-1)); index
  /// ((ix·n + iy)·n + jx)·n + jy.
  void cache(int n);
  const std::vector<double>& cached() const noexcept { return cache_; }
  int cache_points() const noexcept { return cache_n_; }

 private:
  TwoModeField field_;
  std::vector<double> cache_;
  int cache_n_ = 0;
};

}  // namespace vortexcorr
