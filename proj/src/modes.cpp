// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/modes.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "vortexcorr/error.hpp"

namespace vortexcorr {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_order(int n, int max_order) {
  if (n < 0 || n > max_order) {
    throw BoundsError(fmt::format("Hermite order {} outside [0, {}]", n, max_order));
  }
}

Complex integrate_overlap(const ModeLabel& a, const ModeLabel& b, const QuadratureRule& rule) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const Point2D p{rule.nodes[i], rule.nodes[j]};
      sum += rule.weights[i] * rule.weights[j] * std::conj(mode_eval(a, p)) * mode_eval(b, p);
    }
  }
  return sum;
}

}  // namespace

Point2D Point2D::polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

double Point2D::r() const { return std::hypot(x, y); }

double Point2D::theta() const {
  double t = std::atan2(y, x);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  // atan2 may return exactly -0.0 → 0, or a tiny negative that rounds to 2π.
  if (t >= 2.0 * std::numbers::pi) t = 0.0;
  return t;
}

Point2D Point2D::rotated(double alpha) const {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {c * x - s * y, s * x + c * y};
}

ModeLabel ModeLabel::hermite_product(int n, int m) {
  if (n < 0 || m < 0) {
    throw BoundsError("HermiteProduct indices must be non-negative");
  }
  return {ModeKind::HermiteProduct, n, m};
}

std::string ModeLabel::name() const {
  switch (kind) {
    case ModeKind::LeftVortex: return "left-vortex";
    case ModeKind::RightVortex: return "right-vortex";
    case ModeKind::DipoleX: return "dipole-x";
    case ModeKind::DipoleY: return "dipole-y";
    case ModeKind::HermiteProduct: return fmt::format("hermite({},{})", n, m);
  }
  return "unknown";
}

double hermite_eval(int n, double x, int max_order) {
  check_order(n, max_order);
  double h_prev = 1.0;
  if (n == 0) return h_prev;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = next;
  }
  return h;
}

double phi_1d(int n, double x, int max_order) {
  const double h = hermite_eval(n, x, max_order);
  if (h == 0.0) return 0.0;
  // log of (2^n n!)^{-1/2} π^{-1/4} e^{-x²/2}
  const double log_pref =
      -0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0)) - 0.25 * std::log(std::numbers::pi) - 0.5 * x * x;
  return h * std::exp(log_pref);
}

Complex mode_eval(const ModeLabel& mode, Point2D p) {
  switch (mode.kind) {
    case ModeKind::DipoleX: return phi_1d(1, p.x) * phi_1d(0, p.y);
    case ModeKind::DipoleY: return phi_1d(0, p.x) * phi_1d(1, p.y);
    case ModeKind::LeftVortex:
    case ModeKind::RightVortex: {
      const double fx = phi_1d(1, p.x) * phi_1d(0, p.y);
      const double fy = phi_1d(0, p.x) * phi_1d(1, p.y);
      const double sign = mode.kind == ModeKind::LeftVortex ? 1.0 : -1.0;
      return Complex(fx, sign * fy) * kInvSqrt2;
    }
    case ModeKind::HermiteProduct:
      if (mode.n < 0 || mode.m < 0) throw BoundsError("HermiteProduct indices must be non-negative");
      return phi_1d(mode.n, p.x) * phi_1d(mode.m, p.y);
  }
  throw ConfigError("invalid mode label");
}

const QuadratureRule& plane_rule() {
  static const QuadratureRule rule = gauss_legendre(kOverlapOrder, -kDomainHalfWidth, kDomainHalfWidth);
  return rule;
}

Complex overlap(const ModeLabel& a, const ModeLabel& b) {
  static const QuadratureRule coarse = gauss_legendre(48, -kDomainHalfWidth, kDomainHalfWidth);
  const Complex fine = integrate_overlap(a, b, plane_rule());
  const double residual = std::abs(fine - integrate_overlap(a, b, coarse));
  if (residual > 1e-10) {
    throw NumericalError(fmt::format("overlap <{}|{}> did not converge, residual {:.3e}", a.name(), b.name(), residual));
  }
  return fine;
}

}  // namespace vortexcorr
