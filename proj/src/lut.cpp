#include "chaolut/lut.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chaolut/chaos.hpp"

namespace chaolut {

std::vector<std::uint32_t> stable_ranks(std::span<const double> values) {
  std::vector<std::uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              if (values[a] != values[b]) return values[a] < values[b];
              return a < b;
            });
  std::vector<std::uint32_t> ranks(values.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = r;
  }
  return ranks;
}

Lut256 build_lut(std::span<const double> values) {
  if (values.size() != 256) {
    throw Error(Errc::length_mismatch,
                "substitution table needs exactly 256 values, got " +
                    std::to_string(values.size()));
  }
  // Index tie-break makes the comparator a total order, so the sorted
  // sequence (and with it the ciphertext) is identical on every platform.
  std::array<std::uint8_t, 256> order;
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint8_t a, std::uint8_t b) {
    if (values[a] != values[b]) return values[a] < values[b];
    return a < b;
  });
  Lut256 lut;
  for (int rank = 0; rank < 256; ++rank) {
    lut.forward[order[rank]] = static_cast<std::uint8_t>(rank);
    lut.inverse[rank] = order[rank];
  }
  return lut;
}

Lut256 invert(const Lut256& lut) {
  return Lut256{lut.inverse, lut.forward};
}

Lut256 generate_pixel_lut(double mu0, double seed) {
  if (!(seed >= 0.1 && seed < 0.9)) {
    throw Error(Errc::out_of_range,
                "pixel LUT seed " + std::to_string(seed) + " outside [0.1, 0.9)");
  }
  ChaosStream stream(seed, mu0);
  stream.burn_in(kLutBurnIn);
  std::array<double, 256> values;
  for (double& v : values) {
    v = stream.next();
  }
  return build_lut(values);
}

}  // namespace chaolut
