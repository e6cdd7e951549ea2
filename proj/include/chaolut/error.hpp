#pragma once

#include <stdexcept>
#include <string>

namespace chaolut {

enum class Errc {
  out_of_range,
  non_finite,
  degenerate_orbit,
  length_mismatch,
  malformed_key,
  empty_image,
  zero_variance,
  image_too_small,
  dimension_mismatch,
  bad_magic,
  bad_header,
  truncated_data,
  unsupported_maxval,
  io_failure,
};

/// Single exception type for every library failure; code() tells the kind.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace chaolut
