// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rng.hpp
 * @brief Philox4x32-10 counter-based generator.
 *
 * A stream is addressed by (seed, stream_id); draw k of a stream is a pure
 * function of (seed, stream_id, k), so work can be split across threads in any
 * order without changing a single bit of output.
 */

#pragma once

#include <array>
#include <cstdint>

namespace vortexcorr {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// One Philox4x32 block with 10 rounds.
PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key) noexcept;

class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  /// Next 32 random bits.
  std::uint32_t next_u32() noexcept;
  /// Uniform double in the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;

  std::uint64_t draws() const noexcept { return draw_; }

 private:
  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t draw_ = 0;
  PhiloxCounter buffer_{};
};

}  // namespace vortexcorr
