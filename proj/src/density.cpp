// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/density.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "vortexcorr/error.hpp"

namespace vortexcorr {
namespace {

constexpr double kImagTolerance = 1e-12;
constexpr double kSqrt2 = 1.41421356237309504880;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double checked_real(Complex z, const char* what) {
  if (std::abs(z.imag()) > kImagTolerance * std::max(1.0, std::abs(z.real()))) {
    throw AlgebraInconsistency(fmt::format("{} has imaginary residue {:.3e}", what, z.imag()));
  }
  return z.real();
}

using Pair = std::array<Complex, 2>;

// Closed forms written against generic mode values f = (φ_a, φ_b) at the two
// points, so the same bodies serve Cartesian evaluation and the angular
// factor of the polar factorization.
double closed_rho1(const StateKind& kind, const Pair& f) {
  return std::visit(
      overloaded{
          [&](const FermiFockKind&) { return std::norm(f[0]) + std::norm(f[1]); },
          [&](const BoseFockKind& k) { return k.n * std::norm(f[0]) + k.m * std::norm(f[1]); },
          [&](const CoherentKind& k) { return std::norm(k.alpha_a * f[0] + k.alpha_b * f[1]); },
          [&](const ThermalKind& k) { return k.nbar_a * std::norm(f[0]) + k.nbar_b * std::norm(f[1]); },
          [](const CothermalKind&) -> double { throw ConfigError("no closed one-particle form for cothermal states"); },
          [](const NoonKind&) -> double { throw ConfigError("no closed one-particle form for NOON states"); },
      },
      kind);
}

double thermal_rho2(double na, double nb, const Pair& f, const Pair& g) {
  const double nbar[2] = {na, nb};
  double sum = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp) {
      const Complex exchange = std::conj(f[p]) * g[p] * std::conj(g[pp]) * f[pp];
      sum += nbar[p] * nbar[pp] * (std::norm(f[p]) * std::norm(g[pp]) + exchange.real());
    }
  return sum;
}

double closed_rho2(const StateKind& kind, const Pair& f, const Pair& g, FormVariant variant) {
  const bool printed = variant == FormVariant::Printed;
  return std::visit(
      overloaded{
          [&](const FermiFockKind&) {
            if (printed) return std::norm(f[0] * g[0] - f[1] * g[1]);
            return std::norm(f[0] * g[1] - f[1] * g[0]);
          },
          [&](const BoseFockKind& k) {
            const double n = k.n, m = k.m;
            const Complex cross = printed ? f[0] * g[0] + f[1] * g[1] : f[0] * g[1] + f[1] * g[0];
            return n * m * std::norm(cross) + n * (n - 1) * std::norm(f[0] * g[0]) +
                   m * (m - 1) * std::norm(f[1] * g[1]);
          },
          [&](const CoherentKind& k) {
            if (printed) return std::norm(k.alpha_a * f[0]) * std::norm(k.alpha_b * g[1]);
            return std::norm(k.alpha_a * f[0] + k.alpha_b * f[1]) * std::norm(k.alpha_a * g[0] + k.alpha_b * g[1]);
          },
          [&](const ThermalKind& k) { return thermal_rho2(k.nbar_a, k.nbar_b, f, g); },
          [](const CothermalKind&) -> double { throw ConfigError("no closed two-particle form for cothermal states"); },
          [&](const NoonKind&) { return std::norm(f[0] * g[0] - f[1] * g[1]); },
      },
      kind);
}

Basis closed_form_basis(const StateKind& kind) {
  return std::visit(overloaded{
                        [](const FermiFockKind& k) { return k.basis; },
                        [](const BoseFockKind& k) { return k.basis; },
                        [](const CoherentKind& k) { return k.basis; },
                        [](const ThermalKind& k) { return k.basis; },
                        [](const CothermalKind& k) { return k.basis; },
                        [](const NoonKind&) { return Basis::Vortex; },
                    },
                    kind);
}

// Angular parts g of the modes: φ = r e^{-r²/2} g(θ)/√π.
Pair angular_modes(Basis basis, double theta) {
  if (basis == Basis::Vortex) return {std::polar(1.0, theta), std::polar(1.0, -theta)};
  return {kSqrt2 * std::cos(theta), kSqrt2 * std::sin(theta)};
}

}  // namespace

std::array<Complex, 2> mode_values(Basis basis, Point2D p) {
  // φ_0 and φ_1 in closed form; this sits in every quadrature inner loop.
  constexpr double kQuarticRootPi = 0.75112554446494248286;  // π^{-1/4}
  const double g = kQuarticRootPi * kQuarticRootPi * std::exp(-0.5 * (p.x * p.x + p.y * p.y));
  const double dx = kSqrt2 * p.x * g;
  const double dy = kSqrt2 * p.y * g;
  if (basis == Basis::Dipole) return {dx, dy};
  constexpr double s = 0.70710678118654752440;
  return {Complex(dx * s, dy * s), Complex(dx * s, -dy * s)};
}

// ---------------------------------------------------------------------------
// TwoModeField

TwoModeField::TwoModeField(const QuantumState& state) : corr_(vortexcorr::correlators(state)), basis_(state.basis()) {}

TwoModeField::TwoModeField(const CorrelatorSet& correlators, Basis basis) : corr_(correlators), basis_(basis) {}

Complex TwoModeField::rho1_raw(const std::array<Complex, 2>& fp) const {
  Complex sum = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) sum += corr_.first(p, q) * std::conj(fp[p]) * fp[q];
  return sum;
}

Complex TwoModeField::rho2_raw(const std::array<Complex, 2>& fp, const std::array<Complex, 2>& fq) const {
  Complex a[2][2];
  Complex b[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a[i][j] = std::conj(fp[i]) * fp[j];
      b[i][j] = std::conj(fq[i]) * fq[j];
    }
  Complex sum = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp)
      for (int qp = 0; qp < 2; ++qp)
        for (int q = 0; q < 2; ++q) sum += corr_.second(p, pp, qp, q) * a[p][q] * b[pp][qp];
  return sum;
}

double TwoModeField::rho1(Point2D p) const { return checked_real(rho1_raw(mode_values(basis_, p)), "rho1"); }

double TwoModeField::rho2(Point2D p, Point2D q) const {
  return checked_real(rho2_raw(mode_values(basis_, p), mode_values(basis_, q)), "rho2");
}

double rho1(const QuantumState& state, Point2D p) { return TwoModeField(state).rho1(p); }

double rho2(const QuantumState& state, Point2D p, Point2D q) { return TwoModeField(state).rho2(p, q); }

// ---------------------------------------------------------------------------
// Closed forms

double rho1_closed(const StateKind& kind, Point2D p) {
  return closed_rho1(kind, mode_values(closed_form_basis(kind), p));
}

double rho2_closed(const StateKind& kind, Point2D p, Point2D q, FormVariant variant) {
  const Basis basis = closed_form_basis(kind);
  return closed_rho2(kind, mode_values(basis, p), mode_values(basis, q), variant);
}

double polar_angular_factor(const StateKind& kind, double theta, double vartheta) {
  if (std::holds_alternative<CothermalKind>(kind)) {
    throw ConfigError("no closed angular factor for cothermal states");
  }
  const Basis basis = closed_form_basis(kind);
  return 0.5 * closed_rho2(kind, angular_modes(basis, theta), angular_modes(basis, vartheta), FormVariant::Corrected);
}

double rho2_polar(const StateKind& kind, double r, double s, double theta, double vartheta) {
  const double radial = 2.0 * r * r * s * s * std::exp(-r * r - s * s) / (std::numbers::pi * std::numbers::pi);
  return radial * polar_angular_factor(kind, theta, vartheta);
}

// ---------------------------------------------------------------------------
// Fields

DensityField1 density_field1(const QuantumState& state, double spacing) {
  if (!(spacing > 0.0)) throw ConfigError("grid spacing must be positive");
  const TwoModeField field(state);
  DensityField1 out;
  out.spacing = spacing;
  out.points = int(std::lround(2.0 * kDomainHalfWidth / spacing)) + 1;
  out.values.resize(std::size_t(out.points) * out.points);
  double total = 0.0;
  for (int iy = 0; iy < out.points; ++iy) {
    const double wy = (iy == 0 || iy == out.points - 1) ? 0.5 : 1.0;
    for (int ix = 0; ix < out.points; ++ix) {
      const double wx = (ix == 0 || ix == out.points - 1) ? 0.5 : 1.0;
      const double v = field.rho1({out.x(ix), out.y(iy)});
      out.values[std::size_t(iy) * out.points + ix] = v;
      total += wx * wy * v;
    }
  }
  out.total = total * spacing * spacing;
  return out;
}

DensityField2::DensityField2(const QuantumState& state) : field_(state) {}

void DensityField2::cache(int n) {
  if (n < 2 || n > 41) throw BoundsError("cache lattice must have between 2 and 41 points per axis");
  const double h = 2.0 * kDomainHalfWidth / (n - 1);
  std::vector<std::array<Complex, 2>> modes;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      modes.push_back(mode_values(field_.basis(), {-kDomainHalfWidth + ix * h, -kDomainHalfWidth + iy * h}));
  cache_.assign(modes.size() * modes.size(), 0.0);
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = 0; j < modes.size(); ++j) cache_[i * modes.size() + j] = field_.rho2_raw(modes[i], modes[j]).real();
  cache_n_ = n;
}

}  // namespace vortexcorr
