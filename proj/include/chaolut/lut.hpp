#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "chaolut/error.hpp"

namespace chaolut {

/// Bijective byte-to-byte substitution table together with its inverse.
/// Immutable after construction; safe to share read-only.
struct Lut256 {
  std::array<std::uint8_t, 256> forward;
  std::array<std::uint8_t, 256> inverse;  ///< inverse[forward[i]] == i

  friend bool operator==(const Lut256&, const Lut256&) = default;
};

/// Map iterations discarded before collecting the 256 table values. Long
/// enough that seeds differing at the 1e-15 scale decorrelate completely
/// before the first collected value; shorter burn-ins leave the two tables
/// rank-correlated and measurably weaken key sensitivity.
inline constexpr int kLutBurnIn = 128;

/// Rank of each element in ascending order, ties broken by lower index.
std::vector<std::uint32_t> stable_ranks(std::span<const double> values);

/// Builds the substitution table from exactly 256 orbit values in [0, 1]:
/// forward[i] is the rank of values[i] in ascending order with stable
/// tie-breaking, which yields a bijection even when values repeat.
Lut256 build_lut(std::span<const double> values);

/// Swaps the forward and inverse directions.
Lut256 invert(const Lut256& lut);

/// Generates one pixel's table: iterates the map from `seed` (in [0.1, 0.9))
/// under mu0, discards kLutBurnIn steps, ranks the next 256 values.
Lut256 generate_pixel_lut(double mu0, double seed);

}  // namespace chaolut
