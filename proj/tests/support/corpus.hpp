#pragma once

// Deterministic synthetic test images. Integer arithmetic only, so the
// corpus is bit-identical on every platform. The textures are smooth
// triangle-wave gradients with a mild cross ripple: wide intensity range,
// near-uniform histogram, and adjacent-pixel correlation above 0.99 --
// the statistical profile the analysis suite expects from photographic
// test material.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>

#include "chaolut/image.hpp"
#include "chaolut/key.hpp"

namespace testsupport {

inline long long tri_wave(long long t, long long period) {
  const long long m = t % (2 * period);
  return period - std::llabs(m - period);
}

inline chaolut::GrayImage synth_image(int variant, std::uint32_t width = 512,
                                      std::uint32_t height = 512) {
  static constexpr std::array<std::pair<int, int>, 10> kDirs{{{1, 1},
                                                              {2, 1},
                                                              {1, 2},
                                                              {3, 2},
                                                              {2, 3},
                                                              {1, 3},
                                                              {3, 1},
                                                              {2, 2},
                                                              {4, 1},
                                                              {1, 4}}};
  const auto [u1, v1] = kDirs[static_cast<std::size_t>(variant) % kDirs.size()];
  const long long p1 = 360 + 40LL * variant;
  const long long phase1 = 97LL * variant + 13;
  const int u2 = v1 + 1;
  const int v2 = u1;
  const long long p2 = 45 + 7LL * variant;
  const long long phase2 = 5LL * variant;

  chaolut::GrayImage img(width, height);
  for (std::uint32_t r = 0; r < height; ++r) {
    for (std::uint32_t c = 0; c < width; ++c) {
      const long long base =
          tri_wave(u1 * static_cast<long long>(c) + v1 * static_cast<long long>(r) +
                       phase1,
                   p1) *
          255 / p1;
      const long long ripple =
          tri_wave(u2 * static_cast<long long>(c) + v2 * static_cast<long long>(r) +
                       phase2,
                   p2) *
              32 / p2 -
          16;
      img(r, c) = static_cast<std::uint8_t>(
          std::clamp<long long>(base + ripple, 0, 255));
    }
  }
  return img;
}

/// Small fixed pattern used by the frozen cipher test vectors.
inline chaolut::GrayImage pattern_image(std::uint32_t width = 8,
                                        std::uint32_t height = 8) {
  chaolut::GrayImage img(width, height);
  auto px = img.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = static_cast<std::uint8_t>((i * 7 + 3) % 256);
  }
  return img;
}

/// The reference key used throughout the test suite.
inline chaolut::SecretKey reference_key() {
  return chaolut::SecretKey{0.4, 3.9, 0.5002, 3.87001};
}

}  // namespace testsupport
