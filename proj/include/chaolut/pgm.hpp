#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaolut/image.hpp"

namespace chaolut {

/// Decodes binary PGM ("P5"): whitespace-separated header with optional
/// '#' comment lines, maxval 255, one byte per pixel. Trailing bytes after
/// the pixel data are ignored.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical encoder: "P5\n<w> <h>\n255\n" followed by the pixel bytes.
/// read_pgm(write_pgm(img)) == img, bit-exact.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

GrayImage load_pgm_file(const std::string& path);
void save_pgm_file(const std::string& path, const GrayImage& image);

}  // namespace chaolut
