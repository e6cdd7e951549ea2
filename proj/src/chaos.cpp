#include "chaolut/chaos.hpp"

#include <cmath>
#include <string>

namespace chaolut {

ChaosParams validate_params(double x0, double mu) {
  if (!std::isfinite(x0) || !std::isfinite(mu)) {
    throw Error(Errc::non_finite, "chaos parameters must be finite");
  }
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw Error(Errc::out_of_range,
                "x0 = " + std::to_string(x0) + " outside (0, 1)");
  }
  if (!(mu > kAccumulationPoint && mu <= 4.0)) {
    throw Error(Errc::out_of_range,
                "mu = " + std::to_string(mu) + " outside (" +
                    std::to_string(kAccumulationPoint) + ", 4]");
  }
  return ChaosParams{x0, mu};
}

ChaosStream::ChaosStream(double x0, double mu) {
  const ChaosParams params = validate_params(x0, mu);
  x_ = params.x0;
  mu_ = params.mu;
}

double ChaosStream::next() {
  x_ = logistic_step(x_, mu_);
  ++steps_;
  if (x_ <= kOrbitGuard || x_ >= 1.0 - kOrbitGuard) {
    throw Error(Errc::degenerate_orbit,
                "orbit degenerated to " + std::to_string(x_) + " after " +
                    std::to_string(steps_) + " steps");
  }
  return x_;
}

void ChaosStream::burn_in(std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) {
    next();
  }
}

std::uint8_t quantize_byte(double x) {
  if (!(x >= 0.0) || x >= 1.0) {
    throw Error(Errc::out_of_range,
                "quantize_byte input " + std::to_string(x) + " outside [0, 1)");
  }
  // x * 2^40 < 2^40, exact; truncation equals floor for non-negative values.
  return static_cast<std::uint8_t>(static_cast<std::uint64_t>(x * 0x1p40) & 0xFF);
}

double derive_pixel_seed(double x0, std::uint8_t pc) {
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw Error(Errc::out_of_range, "pixel seed requires x0 in (0, 1)");
  }
  const double spread = x0 + x0 * 67108864.0;  // x0 * (1 + 2^26), fixed order
  const double s = spread + (static_cast<double>(pc) + 1.0) / 257.0;
  const double t = s - std::floor(s);
  return 0.1 + 0.8 * t;
}

}  // namespace chaolut
