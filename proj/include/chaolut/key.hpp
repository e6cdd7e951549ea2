#pragma once

#include <string>
#include <string_view>

#include "chaolut/error.hpp"

namespace chaolut {

/// Secret key: four 64-bit reals, 256 bits of key material in total.
/// (x0, mu0) parameterize the per-pixel substitution stage, (x0xor, mu0xor)
/// the XOR pre-whitening stage. Each pair must satisfy validate_params.
struct SecretKey {
  double x0;
  double mu0;
  double x0xor;
  double mu0xor;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

/// Throws unless both (x0, mu0) and (x0xor, mu0xor) are valid chaos params.
void validate_key(const SecretKey& key);

/// Parses 64 hex characters: four 16-digit groups, each the big-endian bit
/// pattern of one 64-bit float, in the order x0, mu0, x0xor, mu0xor.
/// Upper- and lowercase digits are accepted. The parsed key is validated.
SecretKey parse_key(std::string_view hex);

/// Bit-exact inverse of parse_key; always lowercase, always 64 characters.
std::string serialize_key(const SecretKey& key);

}  // namespace chaolut
