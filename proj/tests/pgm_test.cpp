#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"

#include "chaolut/lcg.hpp"
#include "chaolut/pgm.hpp"

using namespace chaolut;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

Errc code_of(const std::vector<std::uint8_t>& data) {
  try {
    (void)read_pgm(data);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_failure;  // sentinel: "did not throw"
}

}  // namespace

TEST_CASE("read_pgm decodes a minimal image") {
  auto data = bytes_of("P5 2 2 255 ");
  data.insert(data.end(), {0, 1, 2, 3});
  const GrayImage img = read_pgm(data);
  CHECK(img.width() == 2);
  CHECK(img.height() == 2);
  CHECK(img(0, 0) == 0);
  CHECK(img(0, 1) == 1);
  CHECK(img(1, 0) == 2);
  CHECK(img(1, 1) == 3);
}

TEST_CASE("read_pgm accepts comments and newline separators") {
  auto data = bytes_of("P5\n# synthetic fixture\n2 1\n# more\n255\n");
  data.insert(data.end(), {9, 8});
  const GrayImage img = read_pgm(data);
  CHECK(img.width() == 2);
  CHECK(img.height() == 1);
  CHECK(img(0, 0) == 9);
  CHECK(img(0, 1) == 8);
}

TEST_CASE("read_pgm error taxonomy") {
  CHECK(code_of(bytes_of("P6 2 2 255 \0\0\0\0")) == Errc::bad_magic);
  CHECK(code_of(bytes_of("")) == Errc::bad_magic);
  CHECK(code_of(bytes_of("P5 a b 255 ")) == Errc::bad_header);
  CHECK(code_of(bytes_of("P5 0 4 255 ")) == Errc::bad_header);
  CHECK(code_of(bytes_of("P5 2 2 ")) == Errc::bad_header);

  auto wide = bytes_of("P5 2 2 65535 ");
  wide.insert(wide.end(), 8, 0);
  CHECK(code_of(wide) == Errc::unsupported_maxval);

  auto shorted = bytes_of("P5 4 4 255 ");
  shorted.insert(shorted.end(), 15, 0);  // header promises 16
  CHECK(code_of(shorted) == Errc::truncated_data);
}

TEST_CASE("write_pgm emits the canonical form") {
  GrayImage one(1, 1);
  one(0, 0) = 0;
  const auto data = write_pgm(one);
  const std::string header = "P5\n1 1\n255\n";
  REQUIRE(data.size() == header.size() + 1);
  CHECK(std::string(data.begin(), data.begin() + header.size()) == header);
  CHECK(data.back() == 0);
}

TEST_CASE("read_pgm(write_pgm(img)) is the identity") {
  Lcg64 rng(2718);
  for (const auto& [w, h] : {std::pair{1u, 1u}, {1u, 7u}, {12u, 3u}, {33u, 20u}}) {
    GrayImage img(w, h);
    for (auto& p : img.pixels()) {
      p = static_cast<std::uint8_t>(rng.next() >> 56);
    }
    CHECK(read_pgm(write_pgm(img)) == img);
  }
}

TEST_CASE("trailing bytes after the raster are ignored") {
  auto data = bytes_of("P5 1 1 255 ");
  data.insert(data.end(), {42, 0, 0, 0});
  const GrayImage img = read_pgm(data);
  CHECK(img(0, 0) == 42);
}
