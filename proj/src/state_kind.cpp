// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/state_kind.hpp"

#include <fmt/format.h>

namespace vortexcorr {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

nlohmann::json complex_json(Complex z) { return {z.real(), z.imag()}; }

}  // namespace

QuantumState make_state(const StateKind& kind, int cutoff) {
  return std::visit(
      overloaded{
          [](const FermiFockKind& k) { return make_fock(1, 1, Statistics::Fermi, k.basis); },
          [](const BoseFockKind& k) { return make_fock(k.n, k.m, Statistics::Bose, k.basis); },
          [cutoff](const CoherentKind& k) { return make_coherent(k.alpha_a, k.alpha_b, cutoff, k.basis); },
          [cutoff](const ThermalKind& k) { return make_thermal(k.nbar_a, k.nbar_b, cutoff, k.basis); },
          [cutoff](const CothermalKind& k) {
            return make_cothermal(k.alpha_a, k.alpha_b, k.nbar_a, k.nbar_b, cutoff, k.basis);
          },
          [](const NoonKind&) { return make_noon(); },
      },
      kind);
}

std::string describe(const StateKind& kind) {
  return std::visit(overloaded{
                        [](const FermiFockKind&) { return std::string("fermi-fock"); },
                        [](const BoseFockKind& k) { return fmt::format("bose-fock({},{})", k.n, k.m); },
                        [](const CoherentKind&) { return std::string("coherent"); },
                        [](const ThermalKind& k) { return fmt::format("thermal({},{})", k.nbar_a, k.nbar_b); },
                        [](const CothermalKind&) { return std::string("cothermal"); },
                        [](const NoonKind&) { return std::string("noon"); },
                    },
                    kind);
}

nlohmann::json to_json(const StateKind& kind) {
  return std::visit(
      overloaded{
          [](const FermiFockKind& k) -> nlohmann::json {
            return {{"state", "fermi-fock"}, {"n", 1}, {"m", 1}, {"basis", to_string(k.basis)}};
          },
          [](const BoseFockKind& k) -> nlohmann::json {
            return {{"state", "bose-fock"}, {"n", k.n}, {"m", k.m}, {"basis", to_string(k.basis)}};
          },
          [](const CoherentKind& k) -> nlohmann::json {
            return {{"state", "coherent"},
                    {"alpha_a", complex_json(k.alpha_a)},
                    {"alpha_b", complex_json(k.alpha_b)},
                    {"basis", to_string(k.basis)}};
          },
          [](const ThermalKind& k) -> nlohmann::json {
            return {{"state", "thermal"}, {"nbar_a", k.nbar_a}, {"nbar_b", k.nbar_b}, {"basis", to_string(k.basis)}};
          },
          [](const CothermalKind& k) -> nlohmann::json {
            return {{"state", "cothermal"},
                    {"alpha_a", complex_json(k.alpha_a)},
                    {"alpha_b", complex_json(k.alpha_b)},
                    {"nbar_a", k.nbar_a},
                    {"nbar_b", k.nbar_b},
                    {"basis", to_string(k.basis)},
                    {"supplement_approximated", true}};
          },
          [](const NoonKind&) -> nlohmann::json { return {{"state", "noon"}, {"basis", "dipole"}}; },
      },
      kind);
}

bool is_two_particle_fock(const StateKind& kind) {
  if (std::holds_alternative<FermiFockKind>(kind) || std::holds_alternative<NoonKind>(kind)) return true;
  if (const auto* b = std::get_if<BoseFockKind>(&kind)) return b->n + b->m == 2;
  return false;
}

}  // namespace vortexcorr
