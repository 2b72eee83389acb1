// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "vortexcorr/error.hpp"
#include "vortexcorr/pair_stats.hpp"
#include "vortexcorr/stats.hpp"

using namespace vortexcorr;
using vortexcorr::testing::kPi;

namespace {

double sup_diff(const PairDistribution& a, const std::function<double(double)>& f) {
  double worst = 0.0;
  for (int i = 0; i < a.points; ++i) worst = std::max(worst, std::abs(a.values[i] - f(a.x(i))));
  return worst;
}

// Oracle integrals by brute-force midpoint sums, independent of the library rules.
double midpoint_moment(const std::function<double(double)>& f, int k, double hi = 12.0, int n = 200000) {
  const double h = hi / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) * h;
    sum += std::pow(x, k) * f(x);
  }
  return sum * h;
}

}  // namespace

TEST_CASE("closed distance laws: normalization, moments and landmarks") {
  const FermiFockKind fermi;
  const BoseFockKind bose;
  const CoherentKind coherent;
  const auto f = [&](double d) { return closed_form_distance(fermi, d); };
  const auto b = [&](double d) { return closed_form_distance(bose, d); };
  const auto c = [&](double d) { return closed_form_distance(coherent, d); };
  const auto b_printed = [&](double d) { return closed_form_distance(bose, d, FormVariant::Printed); };

  for (const auto& law : {std::function<double(double)>(f), std::function<double(double)>(b),
                          std::function<double(double)>(c)}) {
    CHECK(midpoint_moment(law, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(midpoint_moment(law, 2) == doctest::Approx(4.0).epsilon(1e-9));
  }
  CHECK(midpoint_moment(b_printed, 0) == doctest::Approx(7.0 / 8.0 * std::sqrt(kPi / 2)).epsilon(1e-9));
  CHECK(midpoint_moment(f, 1) == doctest::Approx(std::sqrt(9 * kPi / 8)).epsilon(1e-9));
  CHECK(midpoint_moment(b, 1) == doctest::Approx(std::sqrt(121 * kPi / 128)).epsilon(1e-9));
  CHECK(midpoint_moment(c, 1) == doctest::Approx(23.0 / 16 * std::sqrt(kPi / 2)).epsilon(1e-9));

  CHECK(f(2.0) == doctest::Approx(4 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(b(2.0) == doctest::Approx(2 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(c(2.0) == doctest::Approx(3 * std::exp(-2.0)).epsilon(1e-14));
  // Small-d behaviour D_B ≈ d
  CHECK(b(1e-4) == doctest::Approx(1e-4).epsilon(1e-6));

  // Pairwise crossings at d² = 4 ± 2√2
  for (double d2 : {4 - 2 * std::sqrt(2.0), 4 + 2 * std::sqrt(2.0)}) {
    const double d = std::sqrt(d2);
    CHECK(std::abs(f(d) - b(d)) < 1e-8);
    CHECK(std::abs(f(d) - c(d)) < 1e-8);
  }
  CHECK_THROWS_AS(closed_form_distance(fermi, -1.0), ConfigError);
  CHECK_THROWS_AS(closed_form_distance(BoseFockKind{2, 0}, 1.0), ConfigError);
  CHECK_THROWS_AS(closed_form_distance(CoherentKind{1.0, 1.0, Basis::Vortex}, 1.0), ConfigError);
}

TEST_CASE("summaries of the closed laws") {
  const auto fs = summarize(closed_form_distribution(FermiFockKind{}));
  CHECK(fs.mean == doctest::Approx(std::sqrt(9 * kPi / 8)).epsilon(1e-10));
  CHECK(fs.mean == doctest::Approx(1.88).epsilon(1e-3));
  CHECK(fs.second_moment == doctest::Approx(4.0).epsilon(1e-10));
  REQUIRE(fs.local_maxima.size() == 1);
  CHECK(fs.local_maxima[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));

  const auto bs = summarize(closed_form_distribution(BoseFockKind{}));
  CHECK(bs.mean == doctest::Approx(1.723).epsilon(1e-3));
  REQUIRE(bs.local_maxima.size() == 2);
  for (double x : bs.local_maxima) {
    const double x2 = x * x;
    CHECK(std::abs(8 - 20 * x2 + 9 * x2 * x2 - x2 * x2 * x2) < 1e-7);
  }
  CHECK(bs.local_maxima[0] == doctest::Approx(0.715).epsilon(1e-3));
  CHECK(bs.local_maxima[1] == doctest::Approx(2.404).epsilon(1e-3));

  const auto cs = summarize(closed_form_distribution(CoherentKind{}));
  CHECK(cs.mean == doctest::Approx(1.802).epsilon(1e-3));
  CHECK(cs.mean * cs.mean <= cs.second_moment);

  const auto printed = closed_form_distribution(BoseFockKind{}, FormVariant::Printed);
  CHECK(printed.normalization == doctest::Approx(7.0 / 8.0 * std::sqrt(kPi / 2)).epsilon(1e-10));
  CHECK(printed.flags.back() == "bose-form-printed");
}

TEST_CASE("quadrature distance laws match the closed forms") {
  struct Case {
    StateKind kind;
    StateKind law;
  };
  const std::vector<Case> cases = {
      {FermiFockKind{}, FermiFockKind{}},
      {FermiFockKind{Basis::Dipole}, FermiFockKind{}},
      {BoseFockKind{}, BoseFockKind{}},
      {CoherentKind{}, CoherentKind{}},
      {ThermalKind{}, ThermalKind{}},
      {NoonKind{}, CoherentKind{}},
  };
  for (const auto& c : cases) {
    CAPTURE(describe(c.kind));
    const auto dist = distance_distribution(make_state(c.kind), 401);
    CHECK(dist.normalization == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sup_diff(dist, [&](double d) { return closed_form_distance(c.law, d); }) < 1e-9);
    const auto s = summarize(dist);
    CHECK(s.second_moment == doctest::Approx(4.0).epsilon(1e-9));
  }
  const auto fermi = distance_distribution(make_state(FermiFockKind{}), 801);
  CHECK(fermi.values[200] == doctest::Approx(4 * std::exp(-2.0)).epsilon(1e-10));
  CHECK(fermi.values[200] == doctest::Approx(0.5413).epsilon(1e-4));
}

TEST_CASE("distance laws of other states are normalized with E[d^2] = 4") {
  for (const auto& s : {make_fock(2, 0, Statistics::Bose), make_fock(3, 2, Statistics::Bose),
                        make_thermal(0.4, 1.3), make_cothermal(Complex(0.5, 0.5), 0.3)}) {
    const auto dist = distance_distribution(s, 161);
    CHECK(dist.normalization == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(summarize(dist).second_moment == doctest::Approx(4.0).epsilon(1e-9));
  }
}

TEST_CASE("states without pairs are rejected") {
  CHECK_THROWS_AS(distance_distribution(make_fock(1, 0, Statistics::Bose)), NoPairs);
  CHECK_THROWS_AS(angle_distribution(make_fock(0, 1, Statistics::Fermi)), NoPairs);
  CHECK_THROWS_AS(two_angle_distribution(make_fock(0, 0, Statistics::Bose)), NoPairs);
}

TEST_CASE("relative-angle laws") {
  const int n = 90;
  const auto fermi = angle_distribution(make_state(FermiFockKind{}), n);
  const auto bose = angle_distribution(make_state(BoseFockKind{}), n);
  const auto coh = angle_distribution(make_state(CoherentKind{}), n);
  const auto th = angle_distribution(make_state(ThermalKind{}), n);
  for (const auto* d : {&fermi, &bose, &coh, &th}) CHECK(d->normalization == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sup_diff(fermi, [](double t) { return 2 / kPi * std::pow(std::sin(t), 2); }) < 1e-10);
  CHECK(sup_diff(bose, [](double t) { return 2 / kPi * std::pow(std::cos(t), 2); }) < 1e-10);
  CHECK(sup_diff(coh, [](double) { return 1 / kPi; }) < 1e-10);
  CHECK(sup_diff(th, [](double t) { return closed_form_angle(ThermalKind{}, t); }) < 1e-10);
  CHECK(fermi.at(kPi / 2) == doctest::Approx(2 / kPi).epsilon(1e-10));
  CHECK(std::abs(bose.at(0.0) - 2 / kPi) < 1e-10);

  CHECK(closed_form_angle(FermiFockKind{}, 0.3, FormVariant::Printed) ==
        doctest::Approx(closed_form_angle(BoseFockKind{}, 0.3)));
  CHECK_THROWS_AS(angle_distribution(make_noon()), AnisotropicState);
  CHECK_THROWS_AS(angle_distribution(make_coherent(1.0, 0.5, kAutoCutoff)), AnisotropicState);
  CHECK_THROWS_AS(closed_form_angle(NoonKind{}, 0.3), AnisotropicState);
  CHECK(rotation_invariant(make_fock(3, 1, Statistics::Bose)));
  CHECK_FALSE(rotation_invariant(make_fock(2, 0, Statistics::Bose, Basis::Dipole)));
}

TEST_CASE("two-angle laws") {
  const int n = 48;
  const double h = 2 * kPi / n;
  const auto noon = two_angle_distribution(make_noon(), n);
  CHECK(noon.normalization == doctest::Approx(1.0).epsilon(1e-10));
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(noon.values[i * n + j] - std::pow(std::sin(i * h + j * h), 2) / (2 * kPi * kPi)));
  CHECK(worst < 1e-10);

  const auto fermi = two_angle_distribution(make_state(FermiFockKind{}), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(fermi.values[i * n + j] - fermi.values[((i + 5) % n) * n + (j + 5) % n]) < 1e-12);

  const auto coh = two_angle_distribution(make_state(CoherentKind{}), n);
  for (double v : coh.values) CHECK(std::abs(v - 1 / (4 * kPi * kPi)) < 1e-10);
}

TEST_CASE("radial marginal is the ring law 2r^3 exp(-r^2)") {
  for (const auto& s : {make_state(FermiFockKind{}), make_thermal(0.3, 1.1), make_noon()}) {
    const auto rad = radial_marginal(s, 121);
    for (std::size_t i = 0; i < rad.r.size(); ++i) {
      const double r = rad.r[i];
      CHECK(std::abs(rad.p[i] - 2 * r * r * r * std::exp(-r * r)) < 1e-12);
    }
  }
}

TEST_CASE("piecewise-linear sampler inverts its CDF exactly") {
  const PiecewiseLinearSampler uniform({0.0, 2.0}, {1.0, 1.0});
  CHECK(uniform(0.25) == doctest::Approx(0.5));
  const PiecewiseLinearSampler ramp({0.0, 1.0}, {0.0, 2.0});  // CDF x²
  for (double u : {0.01, 0.3, 0.81}) CHECK(ramp(u) == doctest::Approx(std::sqrt(u)).epsilon(1e-14));
  const PiecewiseLinearSampler down({0.0, 1.0}, {2.0, 0.0});  // CDF 2x - x²
  for (double u : {0.01, 0.3, 0.81}) CHECK(down(u) == doctest::Approx(1 - std::sqrt(1 - u)).epsilon(1e-14));
  CHECK_THROWS_AS(PiecewiseLinearSampler({0.0, 1.0}, {0.0, 0.0}), ConfigError);
}

TEST_CASE("law-of-cosines composition") {
  const auto fermi_state = make_state(FermiFockKind{});
  const auto radial = radial_marginal(fermi_state);
  CHECK(compose_distance_samples(radial, angle_distribution(fermi_state), 0, 1).empty());

  SUBCASE("fermi law reproduces the mean separation") {
    const auto samples = compose_distance_samples(radial, angle_distribution(fermi_state), 1000000, 17);
    const auto m = sample_moments(samples);
    CHECK(std::abs(m.mean - std::sqrt(9 * kPi / 8)) < 3 * m.standard_error);
    CHECK(samples == compose_distance_samples(radial, angle_distribution(fermi_state), 1000000, 17));
  }
  SUBCASE("uniform angles give the coherent law") {
    PairDistribution flat;
    flat.variable = PairVariable::RelAngle;
    flat.points = 4;
    flat.values.assign(4, 1 / kPi);
    const auto samples = compose_distance_samples(radial, flat, 200000, 5);
    const auto chi = chi_square_test(make_histogram(samples, 0.0, kMaxDistance, 80),
                                     [](double d) { return closed_form_distance(CoherentKind{}, d); });
    CHECK(chi.p_value > 0.01);
  }
  SUBCASE("bosonic engine laws factorize") {
    const auto bose = make_state(BoseFockKind{});
    const auto samples = compose_distance_samples(radial_marginal(bose), angle_distribution(bose), 200000, 9);
    const auto dist = distance_distribution(bose, 801);
    const auto chi = chi_square_test(make_histogram(samples, 0.0, kMaxDistance, 80), dist.evaluate);
    CHECK(chi.p_value > 0.01);
  }
}
