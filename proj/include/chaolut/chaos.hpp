#pragma once

#include <cstdint>

#include "chaolut/error.hpp"

namespace chaolut {

/// Control parameters above this value put the logistic map past its
/// period-doubling cascade and into the chaotic regime (exclusive bound).
inline constexpr double kAccumulationPoint = 3.5784257;

/// Orbit values at most this close to 0 or 1 poison a stream. The map
/// absorbs at 0, so continuing would emit a constant keystream; failing
/// loudly is the only safe behaviour.
inline constexpr double kOrbitGuard = 1e-12;

/// Validated (x0, mu) pair for the logistic map x -> mu*x*(1-x).
struct ChaosParams {
  double x0;  ///< initial condition, in (0, 1)
  double mu;  ///< control parameter, in (kAccumulationPoint, 4]
};

/// Checks x0 in (0,1) and mu in (kAccumulationPoint, 4]; both finite.
/// The band mu in [3.9, 4.0] makes orbits cover the whole unit interval
/// and is the recommended operating range.
ChaosParams validate_params(double x0, double mu);

/// One logistic-map step, evaluated exactly as (mu * x) * (1 - x) in 64-bit
/// binary floating point. The operation order is part of the contract:
/// ciphertexts must be bit-identical across platforms, so this expression
/// must never be fused or reassociated (see -ffp-contract=off in the build).
inline double logistic_step(double x, double mu) noexcept {
  return (mu * x) * (1.0 - x);
}

/// A single logistic-map orbit. Small mutable value; owned by one execution
/// context at a time, cheap to copy or move across threads.
class ChaosStream {
public:
  ChaosStream(double x0, double mu);

  /// Advances one step and returns the new orbit value.
  /// Throws Errc::degenerate_orbit if the value lands within kOrbitGuard
  /// of 0 or 1; the stream must not be used afterwards.
  double next();

  /// Advances n steps, discarding the values. n = 0 is the identity.
  void burn_in(std::uint64_t n);

  double x() const noexcept { return x_; }
  double mu() const noexcept { return mu_; }
  std::uint64_t steps_taken() const noexcept { return steps_; }

private:
  double x_;
  double mu_;
  std::uint64_t steps_ = 0;
};

/// Maps an orbit value in [0, 1) to a byte as floor(x * 2^40) mod 256,
/// i.e. bits 33..40 after the binary point. Scaling by a power of two is
/// exact in binary floating point, and low-order fraction bits are far more
/// uniformly distributed than high-order bits under the map's non-uniform
/// invariant density.
std::uint8_t quantize_byte(double x);

/// Derives the chaotic seed for one pixel's substitution table from the key
/// component x0 and the previous ciphered byte pc:
///
///   s = (x0 + x0 * 2^26) + (pc + 1) / 257
///   seed = 0.1 + 0.8 * frac(s)
///
/// The result is always in [0.1, 0.9) and distinct for each of the 256
/// values of pc (257 is prime). The 2^26 term spreads x0 across the
/// fraction so that key perturbations at the 1e-15 scale move the seed by
/// ~2^26 ulps; without it, two seeds a few ulps apart can round onto the
/// same orbit within a few iterations and yield identical tables.
double derive_pixel_seed(double x0, std::uint8_t pc);

}  // namespace chaolut
