#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "chaolut/image.hpp"

namespace chaolut {

struct Histogram256 {
  std::array<std::uint64_t, 256> counts{};

  std::uint64_t total() const noexcept {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
  }
};

/// Per-value pixel counts; counts sum to width*height.
Histogram256 histogram(const GrayImage& image);

/// Chi-square statistic of the histogram against the uniform distribution,
/// sum over v of (counts[v] - e)^2 / e with e = total/256 (255 degrees of
/// freedom). Throws Errc::empty_image for an all-zero histogram.
double chi_square_uniformity(const Histogram256& hist);

/// Shannon entropy of the pixel-value distribution in bits/pixel;
/// zero-probability values contribute exactly 0. At most 8.0, with equality
/// iff the histogram is uniform.
double entropy(const GrayImage& image);

enum class Direction { horizontal, vertical, diagonal };

/// Sample of adjacent pixel pairs, tagged with how it was drawn so any
/// report built from it can be reproduced.
struct PixelPairSample {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
  Direction direction;
  std::uint64_t sample_seed;
};

/// Draws n adjacent pairs (with replacement) at positions chosen by Lcg64:
/// each draw advances the generator once and takes state mod the number of
/// valid positions, enumerated row-major. The neighbor is to the right
/// (horizontal), below (vertical) or below-right (diagonal).
/// Throws Errc::image_too_small if no valid position exists.
PixelPairSample sample_adjacent_pairs(const GrayImage& image,
                                      Direction direction, std::size_t n,
                                      std::uint64_t sample_seed);

/// Pearson correlation coefficient of the pair sample using population
/// (1/N) means, variances and covariance. Throws Errc::zero_variance when
/// either coordinate is constant (fewer than two pairs counts as constant).
double correlation(const PixelPairSample& sample);

/// Percentage of positions at which the two images differ.
double npcr(const GrayImage& c1, const GrayImage& c2);

/// Mean |difference| normalized by 255, as a percentage.
double uaci(const GrayImage& c1, const GrayImage& c2);

/// Mean absolute pixel difference, in [0, 255].
double mae(const GrayImage& c1, const GrayImage& c2);

struct DiffMetrics {
  double npcr;
  double uaci;
  double mae;
};

}  // namespace chaolut
