// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief First-quantized reference densities and the engine cross-check.
 *
 * Two-particle Fock states are written as explicitly (anti)symmetrized
 * wavefunctions
 *
 *   Ψ(p, q) = (2 Π n_i!)^{-1/2} [χ(p, q) ± χ(q, p)]
 *
 * with χ the ordered product of occupied orbitals, and ρ⁽²⁾ = 2 |Ψ|². Only
 * mode_eval() is shared with the second-quantized engine. Coherent states are
 * checked through factorization and thermal states as geometric mixtures of
 * Fock two-body marginals.
 */

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vortexcorr/modes.hpp"
#include "vortexcorr/state_kind.hpp"

namespace vortexcorr {

/// Definite two-particle kinds covered by first_quantized_rho2: FermiFock,
/// BoseFock with n + m = 2, Noon.
bool oracle_supported(const StateKind& kind);

/// Ψ(p, q), normalized over the plane. Throws ConfigError for other kinds.
Complex first_quantized_wavefunction(const StateKind& kind, Point2D p, Point2D q);

/// 2 |Ψ(p, q)|².
double first_quantized_rho2(const StateKind& kind, Point2D p, Point2D q);

/// Reference ρ⁽²⁾ for every kind except Cothermal: the wavefunction for Fock
/// kinds, |ψ(p)|² |ψ(q)|² for Coherent and a truncated geometric mixture of
/// Fock marginals for Thermal.
double oracle_rho2(const StateKind& kind, Point2D p, Point2D q);

/// ∬ |Ψ|² by tensor Gauss–Legendre over [-6, 6]⁴.
double oracle_norm(const StateKind& kind, int order = 40);

/// Folded relative-angle law and joint angle law of a supported kind, by
/// direct integration of the oracle density.
double oracle_angle_law(const StateKind& kind, double dtheta);
double oracle_two_angle_law(const StateKind& kind, double theta, double vartheta);

/// Largest |engine ρ⁽²⁾ - oracle ρ⁽²⁾| over all pairs of an n × n lattice on
/// [-6, 6]², i.e. n⁴ pairs.
double max_pair_deviation(const StateKind& kind, int resolution, int threads = 1);

enum class Verdict { Confirmed, TypoSuspected, ConventionDependent, Failed };

std::string to_string(Verdict v);

struct DiscrepancyReport {
  std::string claim;
  std::string subject;      ///< state or law the row refers to
  std::string published_form;   ///< published statement
  std::string engine_form;  ///< what the engine and oracle give
  double max_deviation = 0.0;
  double tolerance = 0.0;
  /// Gating rows are engine-versus-oracle checks; a gating row above its
  /// tolerance is Failed and makes verification fail.
  bool gating = false;
  Verdict verdict = Verdict::Confirmed;
  std::string note;
};

nlohmann::json to_json(const DiscrepancyReport& r);

/// Rows for one kind: engine versus oracle on the pair lattice, the oracle
/// normalization and, where a published form exists, engine versus that form.
std::vector<DiscrepancyReport> cross_validate(const StateKind& kind, int resolution = 61, int threads = 1);

/// Rows about the published pair laws and their quoted numbers.
std::vector<DiscrepancyReport> pair_law_claims(int threads = 1);

/// Every shipped kind through cross_validate plus pair_law_claims.
std::vector<DiscrepancyReport> verify_all(int resolution = 61, int threads = 1);

/// True when no row is Failed.
bool verification_passed(const std::vector<DiscrepancyReport>& rows);

/// Fixed-width text table, one row per report.
std::string format_table(const std::vector<DiscrepancyReport>& rows);

}  // namespace vortexcorr
