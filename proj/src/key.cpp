#include "chaolut/key.hpp"

#include <bit>
#include <cstdint>

#include "chaolut/chaos.hpp"

namespace chaolut {
namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

double parse_component(std::string_view group) {
  std::uint64_t bits = 0;
  for (char c : group) {
    const int d = hex_digit(c);
    if (d < 0) {
      throw Error(Errc::malformed_key,
                  std::string("invalid hex character '") + c + "' in key");
    }
    bits = (bits << 4) | static_cast<std::uint64_t>(d);
  }
  return std::bit_cast<double>(bits);
}

}  // namespace

void validate_key(const SecretKey& key) {
  validate_params(key.x0, key.mu0);
  validate_params(key.x0xor, key.mu0xor);
}

SecretKey parse_key(std::string_view hex) {
  if (hex.size() != 64) {
    throw Error(Errc::malformed_key,
                "key must be 64 hex characters, got " +
                    std::to_string(hex.size()));
  }
  const SecretKey key{
      parse_component(hex.substr(0, 16)),
      parse_component(hex.substr(16, 16)),
      parse_component(hex.substr(32, 16)),
      parse_component(hex.substr(48, 16)),
  };
  validate_key(key);
  return key;
}

std::string serialize_key(const SecretKey& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (double component : {key.x0, key.mu0, key.x0xor, key.mu0xor}) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(component);
    for (int shift = 60; shift >= 0; shift -= 4) {
      out.push_back(kDigits[(bits >> shift) & 0xF]);
    }
  }
  return out;
}

}  // namespace chaolut
