// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state_kind.hpp
 * @brief Parametric descriptions of the shipped state families.
 *
 * A StateKind is what the closed forms, the oracle and the CLI talk about;
 * make_state() turns it into a QuantumState for the engine.
 */

#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "vortexcorr/fock.hpp"

namespace vortexcorr {

/// |1_a⟩_F |1_b⟩_F
struct FermiFockKind {
  Basis basis = Basis::Vortex;
};

/// |n_a⟩_B |m_b⟩_B
struct BoseFockKind {
  int n = 1;
  int m = 1;
  Basis basis = Basis::Vortex;
};

/// |α_a⟩ |α_b⟩
struct CoherentKind {
  Complex alpha_a{0.0, 1.0};
  Complex alpha_b{1.0, 0.0};
  Basis basis = Basis::Dipole;
};

struct ThermalKind {
  double nbar_a = 1.0;
  double nbar_b = 1.0;
  Basis basis = Basis::Vortex;
};

/// Displaced thermal state per mode.
struct CothermalKind {
  Complex alpha_a{0.0, 0.70710678118654752440};
  Complex alpha_b{0.70710678118654752440, 0.0};
  double nbar_a = 0.5;
  double nbar_b = 0.5;
  Basis basis = Basis::Dipole;
};

/// Bosonic dipole pair |1_→, 1_↑⟩, i.e. a two-quantum NOON vortex state.
struct NoonKind {};

using StateKind = std::variant<FermiFockKind, BoseFockKind, CoherentKind, ThermalKind, CothermalKind, NoonKind>;

QuantumState make_state(const StateKind& kind, int cutoff = kAutoCutoff);

/// Short identifier, e.g. "fermi-fock", "bose-fock(2,0)".
std::string describe(const StateKind& kind);
nlohmann::json to_json(const StateKind& kind);

/// True for kinds with a definite particle number of two.
bool is_two_particle_fock(const StateKind& kind);

}  // namespace vortexcorr
