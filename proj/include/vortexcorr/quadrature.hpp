// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quadrature.hpp
 * @brief Fixed-order Gauss rules used by every integral in the library.
 *
 * Nodes start from a Golub–Welsch eigen solve of the Jacobi matrix and are
 * polished by Newton steps on the three-term recurrence, so weights keep full
 * relative precision up to order 128.
 */

#pragma once

#include <vector>

namespace vortexcorr {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss–Legendre rule on [a, b].
QuadratureRule gauss_legendre(int order, double a, double b);

/// Gauss–Hermite rule for  ∫ f(x) exp(-x²) dx  over the real line.
QuadratureRule gauss_hermite(int order);

/// Equal-weight rule for periodic integrands on [0, period); exact for
/// trigonometric polynomials of degree < n.
QuadratureRule periodic_trapezoid(int n, double period);

}  // namespace vortexcorr
