// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "test_support.hpp"
#include "vortexcorr/density.hpp"
#include "vortexcorr/error.hpp"
#include "vortexcorr/frames.hpp"
#include "vortexcorr/pair_stats.hpp"
#include "vortexcorr/quadrature.hpp"

using namespace vortexcorr;
using vortexcorr::testing::kPi;

namespace {

std::string serialize(const FrameSet& f) {
  std::ostringstream out;
  write_frames(out, f);
  return out.str();
}

double ring_law(double r) { return 2 * r * r * r * std::exp(-r * r); }

}  // namespace

TEST_CASE("radius inversion") {
  const double top = radial_cdf(6.0);
  CHECK(sample_radius(0.0) == 0.0);
  CHECK(sample_radius(1.0) == doctest::Approx(6.0).epsilon(1e-12));
  double last = 0.0;
  for (double u : {1e-12, 1e-8, 1e-4, 0.01, 0.2, 0.5, 0.77, 0.99, 0.999999, 1 - 1e-15}) {
    const double r = sample_radius(u);
    CHECK(r > last);
    last = r;
    CHECK(std::abs(radial_cdf(r) / top - u) < 1e-12);
  }
  // Median of t = r² solves (1 + t) e^{-t} = 1/2.
  const double t = sample_radius(0.5) * sample_radius(0.5);
  CHECK((1 + t) * std::exp(-t) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("angular rejection constants") {
  CHECK(PairSampler(make_state(CoherentKind{})).expected_acceptance() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(PairSampler(make_state(FermiFockKind{})).expected_acceptance() == doctest::Approx(0.5));
  CHECK(PairSampler(make_state(BoseFockKind{})).expected_acceptance() == doctest::Approx(0.5));
  CHECK(PairSampler(make_noon()).expected_acceptance() == doctest::Approx(0.5));
  CHECK(PairSampler(make_state(ThermalKind{})).expected_acceptance() == doctest::Approx(0.75).epsilon(1e-9));
  for (const auto& kind : {StateKind{FermiFockKind{}}, StateKind{BoseFockKind{3, 2}}, StateKind{CothermalKind{}}})
    CHECK(PairSampler(make_state(kind)).expected_acceptance() >= 0.25);
  CHECK_THROWS_AS(PairSampler(make_fock(1, 0, Statistics::Fermi)), NoPairs);

  // A relates to the polar angular factor D of the closed forms by A = 2D.
  const PairSampler fermi(make_state(FermiFockKind{}));
  const PairSampler noon(make_noon());
  for (double th : {0.2, 1.9})
    for (double vt : {0.5, 4.4}) {
      CHECK(fermi.angular_factor(th, vt) == doctest::Approx(2 * polar_angular_factor(FermiFockKind{}, th, vt)));
      CHECK(noon.angular_factor(th, vt) == doctest::Approx(2 * polar_angular_factor(NoonKind{}, th, vt)));
      CHECK(fermi.angular_factor(th, vt) <= fermi.majorant());
    }
}

TEST_CASE("frame generation is deterministic and thread-count independent") {
  const auto state = make_state(BoseFockKind{});
  CHECK(generate_frames(state, 0, 1).frames.empty());
  const auto a = generate_frames(state, 3, 7);
  REQUIRE(a.frames.size() == 3);
  for (const auto& f : a.frames) CHECK(f.points.size() == 2);
  const auto one = generate_frames(state, 2000, 99, 1);
  const auto three = generate_frames(state, 2000, 99, 3);
  CHECK(serialize(one) == serialize(three));
  CHECK(serialize(one) == serialize(generate_frames(state, 2000, 99, 1)));
  CHECK(serialize(one) != serialize(generate_frames(state, 2000, 100, 1)));
  // Prefixes agree: frame i depends on (seed, i) only.
  const auto shorter = generate_frames(state, 500, 99);
  for (std::size_t i = 0; i < 500; ++i) CHECK(shorter.frames[i].points[0].x == one.frames[i].points[0].x);
  for (const auto& f : one.frames)
    for (const auto& p : f.points) CHECK(std::max(std::abs(p.x), std::abs(p.y)) <= 6.0);
}

TEST_CASE("frames file round trip") {
  auto set = generate_frames(make_state(FermiFockKind{}), 50, 3, 1, {{"state", "fermi-fock"}});
  std::istringstream in(serialize(set));
  const auto back = read_frames(in);
  CHECK(back.seed == 3);
  CHECK(back.descriptor["state"] == "fermi-fock");
  REQUIRE(back.frames.size() == 50);
  for (std::size_t i = 0; i < 50; ++i)
    for (int k = 0; k < 2; ++k) {
      CHECK(back.frames[i].points[k].x == set.frames[i].points[k].x);
      CHECK(back.frames[i].points[k].y == set.frames[i].points[k].y);
    }
  CHECK(serialize(back) == serialize(set));
  std::istringstream bad("{\"format\":\"other\"}\n");
  CHECK_THROWS_AS(read_frames(bad), ConfigError);
}

TEST_CASE("fermion frames reproduce the pair laws") {
  const auto state = make_state(FermiFockKind{});
  const auto frames = generate_frames(state, 200000, 1);
  CHECK(frames.acceptance_rate == doctest::Approx(0.5).epsilon(0.01));
  const auto stats = empirical_pair_stats(frames, 80);
  const auto m = sample_moments(stats.distances);
  CHECK(std::abs(m.mean - std::sqrt(9 * kPi / 8)) < 3 * m.standard_error);

  const auto dist_chi = chi_square_test(stats.distance, [](double d) { return closed_form_distance(FermiFockKind{}, d); });
  CHECK(dist_chi.p_value > 0.01);
  const auto angle = angle_distribution(state);
  CHECK(chi_square_test(stats.angle, angle.evaluate).p_value > 0.01);

  // Pooling across frames erases the exchange correlation.
  const auto pooled = mismatched_pair_stats(frames, 80);
  CHECK(chi_square_test(pooled.distance, [](double d) { return closed_form_distance(CoherentKind{}, d); }).p_value >
        0.01);
  CHECK(chi_square_test(pooled.angle, [](double) { return 1 / kPi; }).p_value > 0.01);
}

TEST_CASE("noon, coherent and bose frames") {
  const auto noon = empirical_pair_stats(generate_frames(make_noon(), 100000, 2), 80);
  CHECK(chi_square_test(noon.distance, [](double d) { return closed_form_distance(CoherentKind{}, d); }).p_value >
        0.01);

  const auto coh_frames = generate_frames(make_state(CoherentKind{}), 100000, 3);
  CHECK(coh_frames.acceptance_rate == doctest::Approx(1.0).epsilon(1e-6));
  const auto coh = empirical_pair_stats(coh_frames, 60);
  CHECK(chi_square_test(coh.angle, [](double) { return 1 / kPi; }).p_value > 0.01);

  const auto bose = empirical_pair_stats(generate_frames(make_state(BoseFockKind{}), 100000, 4), 80);
  const auto dens = bose.distance.density();
  const auto at = [&](double d) { return dens[std::size_t(d / bose.distance.width())]; };
  CHECK(at(0.71) > at(1.45));
  CHECK(at(2.4) > at(1.45));
  CHECK(chi_square_test(bose.distance, [](double d) { return closed_form_distance(BoseFockKind{}, d); }).p_value >
        0.01);
}

TEST_CASE("frame averages converge to the one-particle donut") {
  const int n = 200000, bins = 25;
  const auto fermi = empirical_profile(generate_frames(make_state(FermiFockKind{}), n, 11), bins);
  const auto bose = empirical_profile(generate_frames(make_state(BoseFockKind{}), n, 12), bins);
  const auto coh = empirical_profile(generate_frames(make_state(CoherentKind{}), n, 13), bins);
  double l1_fb = 0, l1_fc = 0;
  const double cell = fermi.width() * fermi.width();
  for (std::size_t i = 0; i < fermi.counts.size(); ++i) {
    l1_fb += std::abs(fermi.counts[i] / fermi.total - bose.counts[i] / bose.total);
    l1_fc += std::abs(fermi.counts[i] / fermi.total - coh.counts[i] / coh.total);
  }
  const double bound = 4.0 / std::sqrt(2.0 * n);
  CHECK(l1_fb / fermi.counts.size() < bound);
  CHECK(l1_fc / fermi.counts.size() < bound);

  // Pooled density against ρ⁽¹⁾/⟨N̂⟩ near the ring and the dark core.
  const auto s = make_state(FermiFockKind{});
  const int mid = bins / 2;
  const double core = fermi.density(mid, mid);
  // Bin average of ρ⁽¹⁾/⟨N̂⟩ over the central cell.
  const auto gl = gauss_legendre(8, fermi.centre(mid) - fermi.width() / 2, fermi.centre(mid) + fermi.width() / 2);
  double core_expected = 0.0;
  for (std::size_t i = 0; i < gl.size(); ++i)
    for (std::size_t j = 0; j < gl.size(); ++j)
      core_expected += gl.weights[i] * gl.weights[j] * rho1(s, {gl.nodes[i], gl.nodes[j]}) / 2 / cell;
  CHECK(core_expected < 0.02);
  CHECK(std::abs(core - core_expected) < 4 * std::sqrt(core_expected / (fermi.total * cell)));

  const auto frames = generate_frames(make_state(FermiFockKind{}), 100000, 21);
  const auto radial = empirical_radial(frames, 60);
  CHECK(chi_square_test(radial, ring_law).p_value > 0.01);

  FrameSet empty;
  CHECK_THROWS_AS(empirical_profile(empty, 10), EmptyFrames);
  CHECK_THROWS_AS(empirical_pair_stats(empty, 10), EmptyFrames);
}
