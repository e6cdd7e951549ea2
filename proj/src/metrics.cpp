#include "chaolut/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "chaolut/error.hpp"
#include "chaolut/lcg.hpp"

namespace chaolut {

Histogram256 histogram(const GrayImage& image) {
  Histogram256 hist;
  for (std::uint8_t p : image.pixels()) {
    ++hist.counts[p];
  }
  return hist;
}

double chi_square_uniformity(const Histogram256& hist) {
  const std::uint64_t total = hist.total();
  if (total == 0) {
    throw Error(Errc::empty_image, "chi-square of an empty histogram");
  }
  const double expected = static_cast<double>(total) / 256.0;
  double stat = 0.0;
  for (std::uint64_t c : hist.counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

double entropy(const GrayImage& image) {
  const Histogram256 hist = histogram(image);
  const std::uint64_t total = hist.total();
  if (total == 0) {
    throw Error(Errc::empty_image, "entropy of an empty image");
  }
  double bits = 0.0;
  for (std::uint64_t c : hist.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    bits -= p * std::log2(p);
  }
  return bits;
}

PixelPairSample sample_adjacent_pairs(const GrayImage& image,
                                      Direction direction, std::size_t n,
                                      std::uint64_t sample_seed) {
  const std::uint64_t w = image.width();
  const std::uint64_t h = image.height();
  const std::uint64_t cols =
      (direction == Direction::vertical) ? w : w - 1;
  const std::uint64_t rows =
      (direction == Direction::horizontal) ? h : h - 1;
  const std::uint64_t range = cols * rows;
  if (range == 0) {
    throw Error(Errc::image_too_small,
                "image has no adjacent pair in the requested direction");
  }
  PixelPairSample sample{{}, direction, sample_seed};
  sample.pairs.reserve(n);
  Lcg64 rng(sample_seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t pos = rng.next_below(range);
    const auto row = static_cast<std::uint32_t>(pos / cols);
    const auto col = static_cast<std::uint32_t>(pos % cols);
    const std::uint8_t x = image(row, col);
    std::uint8_t y = 0;
    switch (direction) {
      case Direction::horizontal: y = image(row, col + 1); break;
      case Direction::vertical:   y = image(row + 1, col); break;
      case Direction::diagonal:   y = image(row + 1, col + 1); break;
    }
    sample.pairs.emplace_back(x, y);
  }
  return sample;
}

double correlation(const PixelPairSample& sample) {
  const std::size_t n = sample.pairs.size();
  if (n < 2) {
    throw Error(Errc::zero_variance,
                "correlation needs at least two pairs");
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  double ex = 0.0, ey = 0.0;
  for (const auto& [x, y] : sample.pairs) {
    ex += x;
    ey += y;
  }
  ex *= inv_n;
  ey *= inv_n;
  double dx = 0.0, dy = 0.0, cov = 0.0;
  for (const auto& [x, y] : sample.pairs) {
    const double fx = static_cast<double>(x) - ex;
    const double fy = static_cast<double>(y) - ey;
    dx += fx * fx;
    dy += fy * fy;
    cov += fx * fy;
  }
  dx *= inv_n;
  dy *= inv_n;
  cov *= inv_n;
  if (dx == 0.0 || dy == 0.0) {
    throw Error(Errc::zero_variance,
                "correlation undefined for a constant sequence");
  }
  return cov / (std::sqrt(dx) * std::sqrt(dy));
}

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(Errc::dimension_mismatch,
                "images are " + std::to_string(a.width()) + "x" +
                    std::to_string(a.height()) + " vs " +
                    std::to_string(b.width()) + "x" +
                    std::to_string(b.height()));
  }
}

std::uint64_t abs_diff_sum(const GrayImage& a, const GrayImage& b) {
  std::uint64_t sum = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    sum += static_cast<std::uint64_t>(std::abs(int(pa[i]) - int(pb[i])));
  }
  return sum;
}

}  // namespace

double npcr(const GrayImage& c1, const GrayImage& c2) {
  require_same_shape(c1, c2);
  std::uint64_t differing = 0;
  const auto p1 = c1.pixels();
  const auto p2 = c2.pixels();
  for (std::size_t i = 0; i < p1.size(); ++i) {
    differing += (p1[i] != p2[i]) ? 1 : 0;
  }
  return static_cast<double>(differing) / static_cast<double>(p1.size()) *
         100.0;
}

double uaci(const GrayImage& c1, const GrayImage& c2) {
  require_same_shape(c1, c2);
  return static_cast<double>(abs_diff_sum(c1, c2)) /
         (static_cast<double>(c1.size()) * 255.0) * 100.0;
}

double mae(const GrayImage& c1, const GrayImage& c2) {
  require_same_shape(c1, c2);
  return static_cast<double>(abs_diff_sum(c1, c2)) /
         static_cast<double>(c1.size());
}

}  // namespace chaolut
