#include "chaolut/pgm.hpp"

#include <cctype>
#include <fstream>

#include "chaolut/error.hpp"

namespace chaolut {
namespace {

bool is_pgm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

struct Cursor {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  bool done() const { return pos >= data.size(); }

  void skip_space_and_comments() {
    while (!done()) {
      if (is_pgm_space(data[pos])) {
        ++pos;
      } else if (data[pos] == '#') {
        while (!done() && data[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  std::uint64_t next_uint() {
    skip_space_and_comments();
    if (done() || !std::isdigit(data[pos])) {
      throw Error(Errc::bad_header, "expected an unsigned decimal in header");
    }
    std::uint64_t value = 0;
    while (!done() && std::isdigit(data[pos])) {
      value = value * 10 + (data[pos] - '0');
      if (value > 0xFFFFFFFFULL) {
        throw Error(Errc::bad_header, "header value out of range");
      }
      ++pos;
    }
    return value;
  }
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(Errc::bad_magic, "not a binary PGM (magic P5)");
  }
  Cursor cur{bytes, 2};
  const std::uint64_t width = cur.next_uint();
  const std::uint64_t height = cur.next_uint();
  const std::uint64_t maxval = cur.next_uint();
  if (width == 0 || height == 0) {
    throw Error(Errc::bad_header, "zero image dimension");
  }
  if (maxval != 255) {
    throw Error(Errc::unsupported_maxval,
                "maxval " + std::to_string(maxval) + " unsupported (need 255)");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (cur.done() || !is_pgm_space(bytes[cur.pos])) {
    throw Error(Errc::bad_header, "missing separator before pixel data");
  }
  ++cur.pos;
  const std::uint64_t need = width * height;
  if (bytes.size() - cur.pos < need) {
    throw Error(Errc::truncated_data,
                "raster holds " + std::to_string(bytes.size() - cur.pos) +
                    " bytes, header promises " + std::to_string(need));
  }
  std::vector<std::uint8_t> data(bytes.begin() + cur.pos,
                                 bytes.begin() + cur.pos + need);
  return GrayImage(static_cast<std::uint32_t>(width),
                   static_cast<std::uint32_t>(height), std::move(data));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.size());
  out.insert(out.end(), header.begin(), header.end());
  const auto px = image.pixels();
  out.insert(out.end(), px.begin(), px.end());
  return out;
}

GrayImage load_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_failure, "cannot open " + path);
  }
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) {
    throw Error(Errc::io_failure, "read failed for " + path);
  }
  return read_pgm(bytes);
}

void save_pgm_file(const std::string& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::io_failure, "cannot create " + path);
  }
  const std::vector<std::uint8_t> bytes = write_pgm(image);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(Errc::io_failure, "write failed for " + path);
  }
}

}  // namespace chaolut
