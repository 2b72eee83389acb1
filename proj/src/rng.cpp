// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/rng.hpp"

namespace vortexcorr {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
  const std::uint64_t p = std::uint64_t(a) * b;
  hi = std::uint32_t(p >> 32);
  lo = std::uint32_t(p);
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter c, PhiloxKey k) noexcept {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, stream_(stream_id) {}

std::uint32_t CounterStream::next_u32() noexcept {
  const std::uint64_t block = draw_ >> 2;
  if ((draw_ & 3) == 0) {
    buffer_ = philox4x32({std::uint32_t(block), std::uint32_t(block >> 32), std::uint32_t(stream_),
                          std::uint32_t(stream_ >> 32)},
                         key_);
  }
  return buffer_[draw_++ & 3];
}

double CounterStream::uniform() noexcept {
  const std::uint64_t hi = next_u32() >> 5;  // 27 bits
  const std::uint64_t lo = next_u32() >> 6;  // 26 bits
  return (double((hi << 26) | lo) + 0.5) * 0x1p-53;
}

}  // namespace vortexcorr
