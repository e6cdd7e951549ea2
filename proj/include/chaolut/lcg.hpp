#pragma once

#include <cstdint>

namespace chaolut {

/// 64-bit linear congruential generator (Knuth's MMIX constants), wrapping
/// mod 2^64. This is the documented randomness source for everything that
/// must be reproducible from a seed: adjacent-pair sampling and key
/// generation. The state advances before each draw, so two generators with
/// the same seed always produce the same sequence.
class Lcg64 {
public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  /// Draw in [0, bound); bound must be positive. Plain modulo by design:
  /// the mapping is part of the documented sampling contract.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    return next() % bound;
  }

  /// Draw in [0, 1) with 53 random bits.
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1p-53;
  }

private:
  std::uint64_t state_;
};

}  // namespace chaolut
