// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file modes.hpp
 * @brief Harmonic-oscillator eigenfunctions and the 2D vortex/dipole modes.
 *
 * Lengths are in units of the single-charge vortex radius. In these units
 *
 *   φ_n(x)  = (2^n n!)^{-1/2} π^{-1/4} exp(-x²/2) H_n(x)
 *   φ_→     = φ_1(x) φ_0(y),         φ_↑ = φ_0(x) φ_1(y)
 *   φ_⟲     = (φ_→ + i φ_↑)/√2 = r e^{+iθ} e^{-r²/2}/√π
 *   φ_⟳     = conj(φ_⟲)
 *
 * All functions are pure and thread-safe.
 */

#pragma once

#include <complex>
#include <string>

#include "vortexcorr/quadrature.hpp"

namespace vortexcorr {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxOrder = 64;
/// Every quadrature over the plane runs on [-kDomainHalfWidth, kDomainHalfWidth]².
inline constexpr double kDomainHalfWidth = 6.0;
/// Tensor Gauss–Legendre order used for overlaps on the plane.
inline constexpr int kOverlapOrder = 64;

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  static Point2D polar(double r, double theta);

  double r() const;
  /// Polar angle in [0, 2π).
  double theta() const;
  Point2D rotated(double alpha) const;
};

enum class ModeKind { LeftVortex, RightVortex, DipoleX, DipoleY, HermiteProduct };

struct ModeLabel {
  ModeKind kind = ModeKind::LeftVortex;
  int n = 0;  // HermiteProduct only
  int m = 0;  // HermiteProduct only

  static constexpr ModeLabel left_vortex() { return {ModeKind::LeftVortex}; }
  static constexpr ModeLabel right_vortex() { return {ModeKind::RightVortex}; }
  static constexpr ModeLabel dipole_x() { return {ModeKind::DipoleX}; }
  static constexpr ModeLabel dipole_y() { return {ModeKind::DipoleY}; }
  static ModeLabel hermite_product(int n, int m);

  std::string name() const;
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
/// Throws BoundsError for n < 0 or n > max_order.
double hermite_eval(int n, double x, int max_order = kDefaultMaxOrder);

/// Normalized 1D oscillator eigenfunction φ_n(x), prefactor in log domain.
double phi_1d(int n, double x, int max_order = kDefaultMaxOrder);

Complex mode_eval(const ModeLabel& mode, Point2D p);

/// ∫ conj(φ_a) φ_b over the plane by tensor Gauss–Legendre of order
/// kOverlapOrder. Throws NumericalError when the order-48 cross-check
/// differs by more than 1e-10.
Complex overlap(const ModeLabel& a, const ModeLabel& b);

/// The Gauss–Legendre rule used by overlap(), on [-6, 6].
const QuadratureRule& plane_rule();

}  // namespace vortexcorr
