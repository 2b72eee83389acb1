// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Two-mode quantum states on a truncated occupation basis and their
 *        normally ordered correlators.
 *
 * Basis index of |n_a, n_b⟩ is  n_a·(N_max+1) + n_b.  Mode a is the first
 * mode of the basis (⟲ or →), mode b the second (⟳ or ↑).
 *
 * Fermionic ordering: mode a precedes mode b, |1,1⟩ ≡ a†_a a†_b |0⟩.
 * Consequently a_b and a†_b pick up a factor (-1)^{n_a}, while a_a and a†_a
 * carry no sign. Every fermionic sign in the library follows from this.
 *
 * Basis change follows the mode functions φ_⟲ = (φ_→ + iφ_↑)/√2 and
 * φ_⟳ = (φ_→ - iφ_↑)/√2, i.e. a†_⟲ = (a†_→ + i a†_↑)/√2 and
 * a_⟲ = (a_→ - i a_↑)/√2.
 */

#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <nlohmann/json.hpp>

#include "vortexcorr/modes.hpp"

namespace vortexcorr {

enum class Statistics { Bose, Fermi };
enum class Basis { Vortex, Dipole };

std::string to_string(Statistics s);
std::string to_string(Basis b);
Basis other(Basis b);

/// (mode a, mode b) spanning the given basis.
std::array<ModeLabel, 2> basis_modes(Basis b);

/// Passing this as a cutoff selects the smallest one meeting the tail bound.
inline constexpr int kAutoCutoff = -1;
/// Largest truncated probability mass a constructor accepts.
inline constexpr double kTailTolerance = 1e-12;

using Mat2c = Eigen::Matrix2cd;

/// Single-particle matrix u with  c†_j = Σ_p u(p, j) b†_p, where c are the
/// creation operators of basis `from` and b those of the other basis.
Mat2c creation_transform(Basis from);

class QuantumState {
 public:
  using Matrix = Eigen::SparseMatrix<Complex>;

  QuantumState(Statistics stats, int cutoff, Basis basis, Matrix rho);

  Statistics statistics() const noexcept { return stats_; }
  int cutoff() const noexcept { return cutoff_; }
  Basis basis() const noexcept { return basis_; }
  const Matrix& matrix() const noexcept { return rho_; }
  int dim() const noexcept { return (cutoff_ + 1) * (cutoff_ + 1); }

  int index(int na, int nb) const noexcept { return na * (cutoff_ + 1) + nb; }
  std::pair<int, int> occupations(int idx) const noexcept { return {idx / (cutoff_ + 1), idx % (cutoff_ + 1)}; }

  /// ⟨na, nb| ρ |ma, mb⟩, zero outside the truncated space.
  Complex element(int na, int nb, int ma, int mb) const;
  Complex trace() const;
  /// Largest n_a + n_b carrying nonzero diagonal weight.
  int max_total_occupation() const;

  /// Hermiticity, trace and positive semidefiniteness (eigenvalues ≥ -1e-12).
  /// Throws NumericalError naming the violated invariant.
  void validate(double trace_tol = 1e-10) const;

  /// Same state on a different cutoff. Throws TruncationError if shrinking
  /// would drop entries with magnitude above 1e-15.
  QuantumState with_cutoff(int new_cutoff) const;

  /// Provenance annotations, e.g. "supplement-approximated".
  const std::vector<std::string>& flags() const noexcept { return flags_; }
  QuantumState& add_flag(std::string flag);

 private:
  Statistics stats_;
  int cutoff_;
  Basis basis_;
  Matrix rho_;
  std::vector<std::string> flags_;
};

/// Pure product number state |n, m⟩.
QuantumState make_fock(int n, int m, Statistics stats, Basis basis = Basis::Vortex);

/// Product of coherent states |α_a⟩|α_b⟩ (Bose).
QuantumState make_coherent(Complex alpha_a, Complex alpha_b, int cutoff = kAutoCutoff,
                           Basis basis = Basis::Vortex);

/// Product of thermal states with mean occupations n̄_a, n̄_b; per mode
/// P(n) = (1 - τ) τ^n with τ = n̄/(1 + n̄).
QuantumState make_thermal(double nbar_a, double nbar_b, int cutoff = kAutoCutoff, Basis basis = Basis::Vortex);

/// Product of displaced thermal states D(α) ρ_th(n̄) D(α)† per mode.
QuantumState make_cothermal(Complex alpha_a, Complex alpha_b, double nbar_a, double nbar_b,
                            int cutoff = kAutoCutoff, Basis basis = Basis::Vortex);

/// Same displacement and thermal occupation in both modes.
QuantumState make_cothermal(Complex alpha, double nbar, int cutoff = kAutoCutoff, Basis basis = Basis::Vortex);

/// Bosonic dipole pair |1_→, 1_↑⟩ re-expressed in the vortex basis, a NOON
/// state of two vortex quanta.
QuantumState make_noon();

/// Smallest per-mode cutoff with analytic tail mass below kTailTolerance.
int required_cutoff_coherent(Complex alpha_a, Complex alpha_b);
int required_cutoff_thermal(double nbar_a, double nbar_b);

/// Amplitudes of the old-basis number state |n, m⟩ in the other basis,
/// indexed by n_a' of |n_a', n + m - n_a'⟩.
std::vector<Complex> transform_number_state(int n, int m, Statistics stats, Basis from);

/// Re-expresses the density matrix in the other basis (vortex ↔ dipole).
/// The output cutoff is the largest total occupation carried by the input.
QuantumState change_basis(const QuantumState& state);

class CorrelatorSet {
 public:
  CorrelatorSet() { first_.fill(0.0); second_.fill(0.0); }

  /// ⟨a†_p a_q⟩
  Complex& first(int p, int q) { return first_[p * 2 + q]; }
  Complex first(int p, int q) const { return first_[p * 2 + q]; }
  /// ⟨a†_p a†_p' a_q' a_q⟩
  Complex& second(int p, int pp, int qp, int q) { return second_[((p * 2 + pp) * 2 + qp) * 2 + q]; }
  Complex second(int p, int pp, int qp, int q) const { return second_[((p * 2 + pp) * 2 + qp) * 2 + q]; }

  /// ⟨N̂⟩
  double mean_number() const;
  /// ⟨:N̂²:⟩ = Σ_{p,p'} ⟨a†_p a†_p' a_p' a_p⟩
  double pair_weight() const;

  /// Correlators of the annihilators b_v = Σ_c w(v, c) a_c.
  CorrelatorSet transformed(const Mat2c& w) const;

 private:
  std::array<Complex, 4> first_;
  std::array<Complex, 16> second_;
};

CorrelatorSet correlators(const QuantumState& state);

/// Annihilator map taking the state's basis to the vortex basis; identity for
/// vortex states.
Mat2c to_vortex_annihilators(Basis from);

/// Correlators of `state` expressed in the vortex basis.
CorrelatorSet vortex_correlators(const QuantumState& state);

nlohmann::json to_json(const QuantumState& state);
/// Parses and validates; throws ConfigError on malformed documents.
QuantumState state_from_json(const nlohmann::json& doc);

}  // namespace vortexcorr
