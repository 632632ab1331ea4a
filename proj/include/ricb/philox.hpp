// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).  A draw is a
// pure function of (key, counter), so any matrix entry or support draw can be
// regenerated independently of evaluation order.

namespace ricb::philox {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

Counter philox4x32_10(Counter ctr, Key key) noexcept;

inline Key make_key(std::uint64_t seed, std::uint32_t domain = 0) noexcept {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32) ^ domain};
}

/// Uniform in [0, 1) with 53 random bits.
inline double to_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform in (0, 1] with 53 random bits.
inline double to_unit_open_low(std::uint32_t hi, std::uint32_t lo) noexcept {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal from one counter block via Box-Muller (cosine branch).
double normal(Counter ctr, Key key) noexcept;

/// Uniform integer in [0, bound) from one counter block.
std::uint64_t uniform_below(Counter ctr, Key key, std::uint64_t bound) noexcept;

}  // namespace ricb::philox
