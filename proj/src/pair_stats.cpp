// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/pair_stats.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include <fmt/format.h>

#include "vortexcorr/error.hpp"
#include "vortexcorr/parallel.hpp"
#include "vortexcorr/quadrature.hpp"
#include "vortexcorr/rng.hpp"

namespace vortexcorr {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kScanStep = 1e-3;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double pair_weight_or_throw(const TwoModeField& field) {
  const double n2 = field.pair_weight();
  if (!(n2 > 1e-14)) throw NoPairs(fmt::format("state has no pairs to correlate (<:N^2:> = {:.3e})", n2));
  return n2;
}

// Composite Gauss–Legendre over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, int panels = 32, int order = 16) {
  const auto unit = gauss_legendre(order, 0.0, 1.0);
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k)
    for (std::size_t i = 0; i < unit.size(); ++i) sum += unit.weights[i] * f(a + (k + unit.nodes[i]) * h);
  return sum * h;
}

std::vector<double> tabulate(const std::function<double(double)>& f, int n, double step, int threads) {
  std::vector<double> out(std::size_t(n), 0.0);
  parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = f(double(i) * step); });
  return out;
}

// D(d) = d/⟨:N̂²:⟩ ∫ d²R ∫ dφ ρ⁽²⁾(R + d ê/2, R - d ê/2), with R = (u, v)/√2.
struct DistanceKernel {
  TwoModeField field;
  double n2;
  QuadratureRule gh;
  QuadratureRule az;

  double operator()(double d) const {
    if (d <= 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < gh.size(); ++i)
      for (std::size_t j = 0; j < gh.size(); ++j) {
        const double u = gh.nodes[i], v = gh.nodes[j];
        const double cx = u * std::numbers::sqrt2 / 2, cy = v * std::numbers::sqrt2 / 2;
        double ring = 0.0;
        for (std::size_t k = 0; k < az.size(); ++k) {
          const double ex = 0.5 * d * std::cos(az.nodes[k]), ey = 0.5 * d * std::sin(az.nodes[k]);
          const auto fp = mode_values(field.basis(), {cx + ex, cy + ey});
          const auto fq = mode_values(field.basis(), {cx - ex, cy - ey});
          ring += az.weights[k] * field.rho2_raw(fp, fq).real();
        }
        sum += gh.weights[i] * gh.weights[j] * std::exp(u * u + v * v) * ring;
      }
    return 0.5 * d * sum / n2;
  }
};

// Mode values on a polar lattice (radial node i, angle θ).
struct RadialRule {
  QuadratureRule gl;
  explicit RadialRule(int order) : gl(gauss_legendre(order, 0.0, kDomainHalfWidth)) {}

  std::vector<std::array<Complex, 2>> ring(Basis basis, double theta) const {
    std::vector<std::array<Complex, 2>> out;
    out.reserve(gl.size());
    for (double r : gl.nodes) out.push_back(mode_values(basis, Point2D::polar(r, theta)));
    return out;
  }

  // ∫∫ r dr s ds ρ⁽²⁾ at fixed angles.
  double pair_integral(const TwoModeField& field, const std::vector<std::array<Complex, 2>>& a,
                       const std::vector<std::array<Complex, 2>>& b) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.size(); ++i) {
      double inner = 0.0;
      for (std::size_t j = 0; j < gl.size(); ++j)
        inner += gl.weights[j] * gl.nodes[j] * field.rho2_raw(a[i], b[j]).real();
      sum += gl.weights[i] * gl.nodes[i] * inner;
    }
    return sum;
  }
};

struct AngleKernel {
  TwoModeField field;
  double n2;
  RadialRule radial;
  QuadratureRule theta;

  double unfolded(double delta) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) {
      const double t = theta.nodes[k];
      sum += theta.weights[k] *
             radial.pair_integral(field, radial.ring(field.basis(), t), radial.ring(field.basis(), t + delta));
    }
    return sum / n2;
  }
  double operator()(double delta) const { return unfolded(delta) + unfolded(delta + kPi); }
};

double coherent_vortex_check(const CoherentKind& k) {
  Complex a = k.alpha_a, b = k.alpha_b;
  if (k.basis == Basis::Dipole) {
    const Mat2c w = to_vortex_annihilators(Basis::Dipole);
    a = w(0, 0) * k.alpha_a + w(0, 1) * k.alpha_b;
    b = w(1, 0) * k.alpha_a + w(1, 1) * k.alpha_b;
  }
  const double scale = std::max(std::abs(a), std::abs(b));
  if (std::min(std::abs(a), std::abs(b)) > 1e-12 * std::max(1.0, scale)) {
    throw ConfigError("closed forms cover coherent states occupying a single vortex mode");
  }
  return scale;
}

void check_equal_thermal(const ThermalKind& k) {
  if (std::abs(k.nbar_a - k.nbar_b) > 1e-15 * std::max(1.0, k.nbar_a)) {
    throw ConfigError("closed forms cover thermal states with equal occupations");
  }
}

}  // namespace

std::string to_string(PairVariable v) {
  switch (v) {
    case PairVariable::Distance: return "distance";
    case PairVariable::RelAngle: return "relative-angle";
    case PairVariable::TwoAngle: return "two-angle";
  }
  return "?";
}

double PairDistribution::step() const {
  switch (variable) {
    case PairVariable::Distance: return kMaxDistance / (points - 1);
    case PairVariable::RelAngle: return kPi / points;
    case PairVariable::TwoAngle: return kTwoPi / points;
  }
  return 0.0;
}

double PairDistribution::x(int i) const { return i * step(); }

double PairDistribution::upper() const {
  switch (variable) {
    case PairVariable::Distance: return kMaxDistance;
    case PairVariable::RelAngle: return kPi;
    case PairVariable::TwoAngle: return kTwoPi;
  }
  return 0.0;
}

double PairDistribution::at(double xv) const {
  if (evaluate) return evaluate(xv);
  if (variable == PairVariable::TwoAngle) throw ConfigError("two-angle tables are indexed, not interpolated");
  const double h = step();
  if (variable == PairVariable::RelAngle) {
    xv = std::fmod(xv, kPi);
    if (xv < 0) xv += kPi;
    const int i = std::min(int(xv / h), points - 1);
    const double t = xv / h - i;
    return (1 - t) * values[i] + t * values[(i + 1) % points];
  }
  if (xv <= 0.0) return values.front();
  if (xv >= kMaxDistance) return values.back();
  const int i = std::min(int(xv / h), points - 2);
  const double t = xv / h - i;
  return (1 - t) * values[i] + t * values[i + 1];
}

bool rotation_invariant(const QuantumState& state) {
  const CorrelatorSet c = vortex_correlators(state);
  constexpr int l[2] = {1, -1};
  // Truncated tails leave residues of order 1e-12 after the basis change.
  const double tol = 1e-9 * std::max(1.0, c.pair_weight());
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      if (l[p] != l[q] && std::abs(c.first(p, q)) > tol) return false;
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp)
      for (int qp = 0; qp < 2; ++qp)
        for (int q = 0; q < 2; ++q)
          if (l[p] + l[pp] != l[q] + l[qp] && std::abs(c.second(p, pp, qp, q)) > tol) return false;
  return true;
}

PairDistribution distance_distribution(const QuantumState& state, int n_points, int threads, PairQuadrature rule) {
  if (n_points < 3) throw BoundsError("distance grid needs at least 3 points");
  const TwoModeField field(state);
  const double n2 = pair_weight_or_throw(field);
  auto kernel = std::make_shared<DistanceKernel>(
      DistanceKernel{field, n2, gauss_hermite(rule.hermite), periodic_trapezoid(rule.azimuth, kTwoPi)});

  PairDistribution out;
  out.variable = PairVariable::Distance;
  out.points = n_points;
  out.evaluate = [kernel](double d) { return (*kernel)(d); };
  out.values = tabulate(out.evaluate, n_points, out.step(), threads);
  out.normalization = integrate(out.evaluate, 0.0, kMaxDistance);
  out.quadrature_order = rule.hermite;
  out.flags = state.flags();
  return out;
}

PairDistribution angle_distribution(const QuantumState& state, int n_points, int threads, PairQuadrature rule) {
  if (n_points < 2) throw BoundsError("angle grid needs at least 2 points");
  const TwoModeField field(state);
  const double n2 = pair_weight_or_throw(field);
  if (!rotation_invariant(state)) {
    throw AnisotropicState("pair density is not rotation invariant; use the two-angle distribution (--two-angle)");
  }
  auto kernel = std::make_shared<AngleKernel>(
      AngleKernel{field, n2, RadialRule(rule.radial), periodic_trapezoid(rule.angle, kTwoPi)});

  PairDistribution out;
  out.variable = PairVariable::RelAngle;
  out.points = n_points;
  out.evaluate = [kernel](double delta) { return (*kernel)(delta); };
  out.values = tabulate(out.evaluate, n_points, out.step(), threads);
  double total = 0.0;
  for (double v : out.values) total += v;
  out.normalization = total * out.step();
  out.quadrature_order = rule.radial;
  out.flags = state.flags();
  return out;
}

PairDistribution two_angle_distribution(const QuantumState& state, int n_points, int threads, PairQuadrature rule) {
  if (n_points < 2) throw BoundsError("angle grid needs at least 2 points");
  const TwoModeField field(state);
  const double n2 = pair_weight_or_throw(field);
  const RadialRule radial(rule.radial);

  PairDistribution out;
  out.variable = PairVariable::TwoAngle;
  out.points = n_points;
  const double h = out.step();
  std::vector<std::vector<std::array<Complex, 2>>> rings(n_points);
  for (int i = 0; i < n_points; ++i) rings[i] = radial.ring(field.basis(), i * h);
  out.values.assign(std::size_t(n_points) * n_points, 0.0);
  parallel_for(std::size_t(n_points), threads, [&](std::size_t i) {
    for (int j = 0; j < n_points; ++j)
      out.values[i * n_points + j] = radial.pair_integral(field, rings[i], rings[j]) / n2;
  });
  double total = 0.0;
  for (double v : out.values) total += v;
  out.normalization = total * h * h;
  out.quadrature_order = rule.radial;
  out.flags = state.flags();
  return out;
}

double closed_form_distance(const StateKind& kind, double d, FormVariant variant) {
  if (d < 0.0) throw ConfigError("distance must be non-negative");
  const double g = std::exp(-0.5 * d * d);
  const double d2 = d * d;
  const auto fermi = [&] { return 0.5 * d2 * d * g; };
  const auto bose = [&] {
    const double poly = (8.0 - 4.0 * d2 + d2 * d2) / 8.0;
    return (variant == FormVariant::Printed ? 1.0 : d) * poly * g;
  };
  const auto coherent = [&] { return d * (8.0 + d2 * d2) * g / 16.0; };
  return std::visit(overloaded{
                        [&](const FermiFockKind&) { return fermi(); },
                        [&](const BoseFockKind& k) {
                          if (k.n != 1 || k.m != 1) throw ConfigError("closed form covers BoseFock(1,1) only");
                          return k.basis == Basis::Vortex ? bose() : coherent();
                        },
                        [&](const CoherentKind& k) {
                          coherent_vortex_check(k);
                          return coherent();
                        },
                        [&](const ThermalKind& k) {
                          check_equal_thermal(k);
                          return (2.0 * coherent() + bose()) / 3.0;
                        },
                        [](const CothermalKind&) -> double {
                          throw ConfigError("no closed distance law for cothermal states");
                        },
                        [&](const NoonKind&) { return coherent(); },
                    },
                    kind);
}

double closed_form_angle(const StateKind& kind, double dtheta, FormVariant variant) {
  const bool printed = variant == FormVariant::Printed;
  const double s2 = std::pow(std::sin(dtheta), 2), c2 = std::pow(std::cos(dtheta), 2);
  return std::visit(overloaded{
                        [&](const FermiFockKind&) { return 2.0 / kPi * (printed ? c2 : s2); },
                        [&](const BoseFockKind& k) {
                          if (k.n != 1 || k.m != 1 || k.basis != Basis::Vortex) {
                            throw ConfigError("closed angle law covers the vortex BoseFock(1,1) only");
                          }
                          return 2.0 / kPi * (printed ? s2 : c2);
                        },
                        [&](const CoherentKind& k) {
                          coherent_vortex_check(k);
                          return 1.0 / kPi;
                        },
                        [&](const ThermalKind& k) {
                          check_equal_thermal(k);
                          return (3.0 + std::cos(2.0 * dtheta)) / (3.0 * kPi);
                        },
                        [](const CothermalKind&) -> double {
                          throw ConfigError("no closed angle law for cothermal states");
                        },
                        [](const NoonKind&) -> double {
                          throw AnisotropicState("NOON pairs have no relative-angle law; use the two-angle law");
                        },
                    },
                    kind);
}

PairDistribution closed_form_distribution(const StateKind& kind, FormVariant variant, int n_points) {
  if (n_points < 3) throw BoundsError("distance grid needs at least 3 points");
  closed_form_distance(kind, 1.0, variant);  // validates the kind
  PairDistribution out;
  out.variable = PairVariable::Distance;
  out.points = n_points;
  out.evaluate = [kind, variant](double d) { return closed_form_distance(kind, std::max(d, 0.0), variant); };
  out.values = tabulate(out.evaluate, n_points, out.step(), 1);
  out.normalization = integrate(out.evaluate, 0.0, kMaxDistance);
  out.flags.push_back("closed-form");
  if (std::holds_alternative<BoseFockKind>(kind) || std::holds_alternative<ThermalKind>(kind))
    out.flags.push_back(variant == FormVariant::Printed ? "bose-form-printed" : "bose-form-corrected");
  return out;
}

DistSummary summarize(const PairDistribution& dist) {
  if (dist.variable != PairVariable::Distance) throw ConfigError("summaries are defined for distance laws");
  DistSummary out;
  std::function<double(double)> f = [&dist](double x) { return dist.at(x); };
  if (dist.evaluate) f = dist.evaluate;
  out.value_at = f;

  if (dist.evaluate) {
    out.mean = integrate([&](double x) { return x * f(x); }, 0.0, kMaxDistance);
    out.second_moment = integrate([&](double x) { return x * x * f(x); }, 0.0, kMaxDistance);
  } else {
    // Histogram tables: trapezoid on the grid.
    double m0 = 0, m1 = 0, m2 = 0;
    for (int i = 0; i < dist.points; ++i) {
      const double w = (i == 0 || i == dist.points - 1) ? 0.5 : 1.0;
      const double x = dist.x(i);
      m0 += w * dist.values[i];
      m1 += w * x * dist.values[i];
      m2 += w * x * x * dist.values[i];
    }
    out.mean = m1 / m0;
    out.second_moment = m2 / m0;
  }
  out.variance = out.second_moment - out.mean * out.mean;

  const int n = int(std::lround(kMaxDistance / kScanStep));
  std::vector<double> scan(std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i) scan[i] = f(i * kScanStep);
  const double peak = *std::max_element(scan.begin(), scan.end());
  const auto slope = [&](double x) {
    const double h = 1e-6;
    return f(x + h) - f(std::max(x - h, 0.0));
  };
  for (int i = 1; i < n; ++i) {
    if (!(scan[i] > scan[i - 1] && scan[i] >= scan[i + 1]) || scan[i] < 1e-6 * peak) continue;
    double lo = (i - 1) * kScanStep, hi = (i + 1) * kScanStep;
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      (slope(mid) > 0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    if (out.local_maxima.empty() || x - out.local_maxima.back() > kScanStep) out.local_maxima.push_back(x);
  }
  return out;
}

RadialDensity radial_marginal(const QuantumState& state, int n_points) {
  if (n_points < 3) throw BoundsError("radial grid needs at least 3 points");
  const TwoModeField field(state);
  const double n1 = field.mean_number();
  if (!(n1 > 1e-14)) throw NoPairs("state carries no particles");
  const auto ring = periodic_trapezoid(12, kTwoPi);
  RadialDensity out;
  const double h = kDomainHalfWidth / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double r = i * h;
    double sum = 0.0;
    for (std::size_t k = 0; k < ring.size(); ++k)
      sum += ring.weights[k] * field.rho1_raw(mode_values(field.basis(), Point2D::polar(r, ring.nodes[k]))).real();
    out.r.push_back(r);
    out.p.push_back(r * sum / n1);
  }
  return out;
}

PiecewiseLinearSampler::PiecewiseLinearSampler(std::vector<double> x, std::vector<double> f)
    : x_(std::move(x)), f_(std::move(f)) {
  if (x_.size() < 2 || x_.size() != f_.size()) throw ConfigError("sampler needs matching grids of at least 2 points");
  cdf_.assign(x_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    if (!(x_[i + 1] > x_[i])) throw ConfigError("sampler grid must increase");
    if (f_[i] < 0.0) f_[i] = 0.0;
    cdf_[i + 1] = cdf_[i] + 0.5 * (f_[i] + std::max(f_[i + 1], 0.0)) * (x_[i + 1] - x_[i]);
  }
  if (f_.back() < 0.0) f_.back() = 0.0;
  if (!(cdf_.back() > 0.0)) throw ConfigError("sampler density has no mass");
}

double PiecewiseLinearSampler::operator()(double u) const {
  const double target = u * cdf_.back();
  std::size_t i = std::upper_bound(cdf_.begin(), cdf_.end(), target) - cdf_.begin();
  i = std::clamp<std::size_t>(i, 1, cdf_.size() - 1) - 1;
  const double h = x_[i + 1] - x_[i];
  const double res = target - cdf_[i];
  const double a = (f_[i + 1] - f_[i]) / (2.0 * h);
  const double b = f_[i];
  // a t² + b t = res, stable root
  const double disc = std::sqrt(std::max(b * b + 4.0 * a * res, 0.0));
  const double t = (b + disc) > 0.0 ? 2.0 * res / (b + disc) : 0.0;
  return std::clamp(x_[i] + t, x_[i], x_[i + 1]);
}

std::vector<double> compose_distance_samples(const RadialDensity& radial, const PairDistribution& angular,
                                             std::size_t n, std::uint64_t seed) {
  if (angular.variable != PairVariable::RelAngle) throw ConfigError("angular law must be a relative-angle law");
  std::vector<double> out;
  if (n == 0) return out;
  const PiecewiseLinearSampler radius(radial.r, radial.p);
  std::vector<double> ax, af;
  for (int i = 0; i < angular.points; ++i) {
    ax.push_back(angular.x(i));
    af.push_back(angular.values[i]);
  }
  ax.push_back(kPi);
  af.push_back(angular.values.front());
  const PiecewiseLinearSampler angle(ax, af);
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    CounterStream stream(seed, i);
    const double r1 = radius(stream.uniform());
    const double r2 = radius(stream.uniform());
    double theta = angle(stream.uniform());
    if (stream.uniform() < 0.5) theta += kPi;
    out[i] = std::sqrt(std::max(r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(theta), 0.0));
  }
  return out;
}

}  // namespace vortexcorr
