#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chaolut/error.hpp"

namespace chaolut {

/// Grayscale image: width x height 8-bit pixels, row-major.
class GrayImage {
public:
  /// Zero-filled image. Throws Errc::out_of_range for zero dimensions.
  GrayImage(std::uint32_t width, std::uint32_t height)
      : GrayImage(width, height,
                  std::vector<std::uint8_t>(
                      static_cast<std::size_t>(width) * height)) {}

  GrayImage(std::uint32_t width, std::uint32_t height,
            std::vector<std::uint8_t> data)
      : width_(width), height_(height), data_(std::move(data)) {
    if (width_ == 0 || height_ == 0) {
      throw Error(Errc::out_of_range, "image dimensions must be at least 1x1");
    }
    if (data_.size() != static_cast<std::size_t>(width_) * height_) {
      throw Error(Errc::length_mismatch,
                  "pixel buffer size does not match width*height");
    }
  }

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::uint8_t operator()(std::uint32_t row, std::uint32_t col) const noexcept {
    return data_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::uint8_t& operator()(std::uint32_t row, std::uint32_t col) noexcept {
    return data_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return data_; }
  std::span<std::uint8_t> pixels() noexcept { return data_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<std::uint8_t> data_;
};

}  // namespace chaolut
