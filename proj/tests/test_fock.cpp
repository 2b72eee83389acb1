// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "vortexcorr/error.hpp"
#include "vortexcorr/fock.hpp"
#include "vortexcorr/quadrature.hpp"

using namespace vortexcorr;
using vortexcorr::testing::kI;

namespace {

QuantumState random_state(Statistics stats, int cutoff, Basis basis, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  const int dim = (cutoff + 1) * (cutoff + 1);
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(gen), normal(gen));
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return QuantumState(stats, cutoff, basis, rho.sparseView());
}

double max_abs_diff(const QuantumState& a, const QuantumState& b) {
  const int cutoff = std::max(a.cutoff(), b.cutoff());
  const Eigen::MatrixXcd da(a.with_cutoff(cutoff).matrix());
  const Eigen::MatrixXcd db(b.with_cutoff(cutoff).matrix());
  return (da - db).cwiseAbs().maxCoeff();
}

double mode_a_probability(const QuantumState& s, int n) {
  double p = 0.0;
  for (int nb = 0; nb <= s.cutoff(); ++nb) p += s.element(n, nb, n, nb).real();
  return p;
}

// Oracle for the diagonal of a displaced thermal state: Gaussian P-function
// mixture of coherent states, ∫ P(β) e^{-|β|²} |β|^{2m}/m! d²β, by 2D
// Gauss–Hermite quadrature around the displacement.
double displaced_thermal_diag(Complex alpha, double nbar, int m) {
  const auto gh = gauss_hermite(60);
  double sum = 0.0;
  for (std::size_t i = 0; i < gh.size(); ++i)
    for (std::size_t j = 0; j < gh.size(); ++j) {
      const Complex beta = alpha + std::sqrt(nbar) * Complex(gh.nodes[i], gh.nodes[j]);
      const double b2 = std::norm(beta);
      const double poisson = std::exp(-b2 + m * std::log(std::max(b2, 1e-300)) - std::lgamma(m + 1.0));
      sum += gh.weights[i] * gh.weights[j] * (m == 0 ? std::exp(-b2) : poisson);
    }
  return sum / vortexcorr::testing::kPi;
}

}  // namespace

TEST_CASE("make_fock") {
  const auto f = make_fock(1, 1, Statistics::Fermi);
  CHECK(f.cutoff() == 1);
  CHECK(f.trace() == Complex(1.0));
  CHECK(f.element(1, 1, 1, 1) == Complex(1.0));
  f.validate();

  const auto b = make_fock(2, 0, Statistics::Bose);
  CHECK(b.cutoff() == 2);
  CHECK(b.element(2, 0, 2, 0) == Complex(1.0));
  b.validate();

  CHECK_THROWS_AS(make_fock(2, 0, Statistics::Fermi), PauliViolation);
  CHECK_THROWS_AS(make_fock(-1, 0, Statistics::Bose), ConfigError);
  CHECK_THROWS_AS(QuantumState(Statistics::Fermi, 2, Basis::Vortex, QuantumState::Matrix(9, 9)), PauliViolation);
}

TEST_CASE("make_coherent") {
  const auto vac = make_coherent(0.0, 0.0, 5);
  CHECK(std::abs(vac.element(0, 0, 0, 0) - 1.0) < 1e-15);

  const auto s = make_coherent(1.0, kI, 16, Basis::Dipole);
  s.validate();
  CHECK(mode_a_probability(s, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(mode_a_probability(s, 0) == doctest::Approx(0.3679).epsilon(1e-4));
  const auto c = correlators(s);
  CHECK(std::abs(c.first(0, 0) - 1.0) < 1e-10);
  CHECK(std::abs(c.first(1, 1) - 1.0) < 1e-10);
  // ⟨a†_a a_b⟩ = α_a* α_b
  CHECK(std::abs(c.first(0, 1) - kI) < 1e-10);

  CHECK(required_cutoff_coherent(1.0, kI) == 14);
  try {
    make_coherent(3.0, 0.0, 5);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.required_cutoff() == required_cutoff_coherent(3.0, 0.0));
    CHECK(e.required_cutoff() > 5);
  }
  CHECK(make_coherent(3.0, 0.0).cutoff() == required_cutoff_coherent(3.0, 0.0));
}

TEST_CASE("make_thermal") {
  const auto vac = make_thermal(0.0, 0.0, 3);
  CHECK(std::abs(vac.element(0, 0, 0, 0) - 1.0) < 1e-15);

  const auto t = make_thermal(1.0, 1.0, 40);
  for (int n = 0; n < 10; ++n) CHECK(mode_a_probability(t, n) == doctest::Approx(std::ldexp(1.0, -(n + 1))).epsilon(1e-11));
  // Geometric second factorial moment: Σ n(n-1) 2^{-(n+1)} = 2 n̄² = 2.
  double oracle = 0.0;
  for (int n = 0; n < 200; ++n) oracle += n * (n - 1.0) * std::ldexp(1.0, -(n + 1));
  CHECK(oracle == doctest::Approx(2.0).epsilon(1e-14));
  const auto c = correlators(t);
  CHECK(std::abs(c.second(0, 0, 0, 0) - oracle) < 1e-9);
  CHECK(std::abs(c.second(1, 1, 1, 1) - oracle) < 1e-9);
  CHECK(std::abs(c.first(0, 1)) < 1e-15);

  CHECK_THROWS_AS(make_thermal(1.0, 1.0, 20), TruncationError);
  CHECK_THROWS_AS(make_thermal(-1.0, 1.0), ConfigError);
}

TEST_CASE("make_cothermal endpoints and mean occupation") {
  const Complex alpha(0.6, -0.3);
  CHECK(max_abs_diff(make_cothermal(alpha, 0.0, 14), make_coherent(alpha, alpha, 14)) < 1e-13);
  CHECK(max_abs_diff(make_cothermal(0.0, 0.7, 40), make_thermal(0.7, 0.7, 40)) < 1e-13);

  const auto s = make_cothermal(1.0, 0.5, 40);
  s.validate();
  const auto c = correlators(s);
  CHECK(std::abs(c.first(0, 0) - 1.5) < 1e-10);
  CHECK(std::abs(c.first(1, 1) - 1.5) < 1e-10);
  CHECK(s.flags() == std::vector<std::string>{"supplement-approximated"});

  for (int m = 0; m < 8; ++m) {
    double diag = 0.0;
    for (int nb = 0; nb <= s.cutoff(); ++nb) diag += s.element(m, nb, m, nb).real();
    CHECK(std::abs(diag - displaced_thermal_diag(1.0, 0.5, m)) < 1e-10);
  }
  CHECK_THROWS_AS(make_cothermal(1.0, 0.5, 6), TruncationError);
}

TEST_CASE("change_basis reproduces the dipole/vortex identities") {
  const double r = 1.0 / std::sqrt(2.0);

  SUBCASE("bosonic dipole pair becomes a NOON state") {
    const auto noon = change_basis(make_fock(1, 1, Statistics::Bose, Basis::Dipole));
    CHECK(noon.basis() == Basis::Vortex);
    // |ψ⟩ = (i/√2)(|2,0⟩ - |0,2⟩)
    const Complex psi20 = kI * r, psi02 = -kI * r;
    CHECK(std::abs(noon.element(2, 0, 2, 0) - psi20 * std::conj(psi20)) < 1e-12);
    CHECK(std::abs(noon.element(0, 2, 0, 2) - psi02 * std::conj(psi02)) < 1e-12);
    CHECK(std::abs(noon.element(2, 0, 0, 2) - psi20 * std::conj(psi02)) < 1e-12);
    CHECK(std::abs(noon.element(1, 1, 1, 1)) < 1e-12);
    CHECK(std::abs(noon.trace() - 1.0) < 1e-12);

    // Ket level: moduli 1/√2 with relative sign -1; the global phase from the
    // mode-function convention is -i rather than +i.
    const auto amps = transform_number_state(1, 1, Statistics::Bose, Basis::Dipole);
    REQUIRE(amps.size() == 3);
    CHECK(std::abs(std::abs(amps[2]) - r) < 1e-15);
    CHECK(std::abs(std::abs(amps[0]) - r) < 1e-15);
    CHECK(std::abs(amps[1]) < 1e-15);
    CHECK(std::abs(amps[2] + amps[0]) < 1e-15);
  }

  SUBCASE("fermionic dipole pair is i times the vortex pair") {
    const auto amps = transform_number_state(1, 1, Statistics::Fermi, Basis::Dipole);
    CHECK(std::abs(amps[1] - kI) < 1e-15);
    const auto v = change_basis(make_fock(1, 1, Statistics::Fermi, Basis::Dipole));
    CHECK(std::abs(v.element(1, 1, 1, 1) - 1.0) < 1e-12);
    CHECK(std::abs(v.trace() - 1.0) < 1e-12);
  }

  SUBCASE("vacuum is invariant") {
    const auto v = change_basis(make_fock(0, 0, Statistics::Bose));
    CHECK(std::abs(v.element(0, 0, 0, 0) - 1.0) < 1e-15);
  }
}

TEST_CASE("change_basis twice is the identity and preserves state invariants") {
  std::vector<QuantumState> states = {
      make_fock(2, 1, Statistics::Bose),
      make_fock(0, 1, Statistics::Fermi, Basis::Dipole),
      make_thermal(0.7, 0.3),
      make_coherent(Complex(0.5, 0.2), Complex(0.0, -0.3), kAutoCutoff, Basis::Dipole),
  };
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    states.push_back(random_state(Statistics::Bose, 2, seed % 2 ? Basis::Vortex : Basis::Dipole, seed));
    states.push_back(random_state(Statistics::Fermi, 1, seed % 2 ? Basis::Vortex : Basis::Dipole, 100 + seed));
  }
  for (const auto& s : states) {
    const auto once = change_basis(s);
    CHECK(once.basis() == other(s.basis()));
    CHECK(std::abs(once.trace() - s.trace()) < 1e-12);
    if (once.dim() <= 400) once.validate(1e-12);
    CHECK(max_abs_diff(change_basis(once), s) < 1e-12);
  }
}

TEST_CASE("correlators: algebra spot checks") {
  SUBCASE("fermions vanish for repeated indices") {
    const auto c = correlators(make_fock(1, 1, Statistics::Fermi));
    for (int p = 0; p < 2; ++p)
      for (int qp = 0; qp < 2; ++qp)
        for (int q = 0; q < 2; ++q) {
          CHECK(c.second(p, p, qp, q) == Complex(0.0));
          CHECK(c.second(qp, q, p, p) == Complex(0.0));
        }
    CHECK(c.second(0, 1, 1, 0) == Complex(1.0));
    CHECK(c.second(1, 0, 1, 0) == Complex(-1.0));
    CHECK(c.second(0, 1, 0, 1) == Complex(-1.0));
    CHECK(c.second(1, 0, 0, 1) == Complex(1.0));
    CHECK(c.pair_weight() == 2.0);
  }
  SUBCASE("Bose |2,0⟩ gives n(n-1) = 2") {
    const auto c = correlators(make_fock(2, 0, Statistics::Bose));
    CHECK(c.second(0, 0, 0, 0) == Complex(2.0));
    CHECK(c.mean_number() == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("Bose |1,1⟩: every distinct-index ordering equals one") {
    const auto c = correlators(make_fock(1, 1, Statistics::Bose));
    CHECK(c.second(0, 1, 1, 0) == Complex(1.0));
    CHECK(c.second(1, 0, 1, 0) == Complex(1.0));
    CHECK(c.second(0, 1, 0, 1) == Complex(1.0));
    CHECK(c.second(1, 0, 0, 1) == Complex(1.0));
    CHECK(c.second(0, 0, 0, 0) == Complex(0.0));
  }
  SUBCASE("Bose enhancement n(n-1) for |n,0⟩") {
    for (int n = 0; n <= 12; ++n) {
      const auto c = correlators(make_fock(n, 0, Statistics::Bose));
      CHECK(std::abs(c.second(0, 0, 0, 0) - double(n * (n - 1))) < 1e-12);
      CHECK(c.mean_number() == doctest::Approx(n).epsilon(1e-15));
    }
  }
  SUBCASE("mean number of Fock states") {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) CHECK(correlators(make_fock(n, m, Statistics::Bose)).mean_number() == doctest::Approx(n + m).epsilon(1e-15));
  }
}

TEST_CASE("correlator symmetries hold for arbitrary states") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (Statistics stats : {Statistics::Bose, Statistics::Fermi}) {
      const auto s = random_state(stats, stats == Statistics::Bose ? 3 : 1, Basis::Vortex, seed);
      const auto c = correlators(s);
      const double sign = stats == Statistics::Bose ? 1.0 : -1.0;
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) CHECK(std::abs(c.first(p, q) - std::conj(c.first(q, p))) < 1e-14);
      for (int p = 0; p < 2; ++p) {
        CHECK(c.first(p, p).real() >= -1e-12);
        for (int pp = 0; pp < 2; ++pp) {
          CHECK(c.second(p, pp, pp, p).real() >= -1e-12);
          for (int qp = 0; qp < 2; ++qp)
            for (int q = 0; q < 2; ++q) {
              CHECK(std::abs(c.second(p, pp, qp, q) - sign * c.second(pp, p, qp, q)) < 1e-14);
              CHECK(std::abs(c.second(p, pp, qp, q) - sign * c.second(p, pp, q, qp)) < 1e-14);
            }
        }
      }
      // ⟨N̂⟩ as the trace of ρ N̂
      double n_direct = 0.0;
      for (int i = 0; i < s.dim(); ++i) {
        const auto [na, nb] = s.occupations(i);
        n_direct += (na + nb) * s.matrix().coeff(i, i).real();
      }
      CHECK(std::abs(c.mean_number() - n_direct) < 1e-12);
    }
  }
}

TEST_CASE("single-particle transform of correlators matches the many-body basis change") {
  const std::vector<QuantumState> states = {
      make_coherent(kI, 1.0, kAutoCutoff, Basis::Dipole),
      make_fock(2, 1, Statistics::Bose, Basis::Dipole),
      make_fock(1, 1, Statistics::Fermi, Basis::Dipole),
      make_cothermal(Complex(0.3, 0.1), Complex(-0.2, 0.4), 0.4, 0.2, kAutoCutoff, Basis::Dipole),
      random_state(Statistics::Bose, 2, Basis::Dipole, 77),
  };
  for (const auto& s : states) {
    const auto direct = correlators(change_basis(s));
    const auto transformed = vortex_correlators(s);
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) CHECK(std::abs(direct.first(p, q) - transformed.first(p, q)) < 1e-12);
    for (int p = 0; p < 2; ++p)
      for (int pp = 0; pp < 2; ++pp)
        for (int qp = 0; qp < 2; ++qp)
          for (int q = 0; q < 2; ++q)
            CHECK(std::abs(direct.second(p, pp, qp, q) - transformed.second(p, pp, qp, q)) < 1e-12);
  }
}

TEST_CASE("JSON serialization") {
  const auto s = random_state(Statistics::Bose, 2, Basis::Dipole, 5);
  const auto back = state_from_json(to_json(s));
  CHECK(back.basis() == Basis::Dipole);
  CHECK(back.statistics() == Statistics::Bose);
  CHECK(max_abs_diff(back, s) == 0.0);

  auto doc = to_json(make_fock(1, 0, Statistics::Fermi));
  CHECK(doc["statistics"] == "fermi");
  CHECK(doc["matrix"].size() == 4);

  auto bad = doc;
  bad["matrix"][0][0] = {-1.0, 0.0};
  bad["matrix"][2][2] = {2.0, 0.0};
  CHECK_THROWS_AS(state_from_json(bad), ConfigError);
  bad = doc;
  bad["matrix"].erase(0);
  CHECK_THROWS_AS(state_from_json(bad), ConfigError);
  CHECK_THROWS_AS(state_from_json(nlohmann::json{{"statistics", "anyon"}}), ConfigError);
}
