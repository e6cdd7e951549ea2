#pragma once

#include <span>
#include <string>
#include <vector>

#include "chaolut/image.hpp"
#include "chaolut/key.hpp"
#include "chaolut/metrics.hpp"

namespace chaolut {

enum class KeyComponent { x0, mu0, x0xor, mu0xor };

/// One additive nudge to a single key component.
struct KeyPerturbation {
  KeyComponent component;
  double delta = 1e-15;
};

enum class MetricKind { npcr, uaci, mae };

double metric_value(MetricKind kind, const GrayImage& a, const GrayImage& b);

/// Square grid of pairwise metric values over a set of labelled images.
/// Zero diagonal and symmetric by construction (all three metrics are
/// symmetric in their arguments).
struct SensitivityMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> cells;
  MetricKind metric;
};

/// Returns the key with the stated component replaced by component + delta
/// (64-bit float addition); the other components are bit-identical.
/// Throws Errc::out_of_range if the result leaves the valid interval.
SecretKey perturb_key(const SecretKey& key, const KeyPerturbation& p);

/// Encrypts the image and a copy with the pixel at (change_row, change_col)
/// incremented by 1 mod 256, both under the same key, and measures how much
/// the two ciphertexts differ.
DiffMetrics plaintext_sensitivity(const GrayImage& image, const SecretKey& key,
                                  std::uint32_t change_row,
                                  std::uint32_t change_col);

/// Encrypts the image under the base key and under each perturbed key;
/// the matrix covers those ciphertexts (labels I_C, I_C1, ...) plus the
/// plain image as the last row/column (label I).
SensitivityMatrix cipher_key_sensitivity(const GrayImage& image,
                                         const SecretKey& base_key,
                                         std::span<const KeyPerturbation> deltas,
                                         MetricKind metric);

/// Encrypts under the base key, then decrypts that ciphertext under the base
/// key and under each perturbed key; the matrix covers the decrypted images
/// (labels I_D, I_D1, ...) plus the plain image (label I).
SensitivityMatrix decipher_key_sensitivity(const GrayImage& image,
                                           const SecretKey& base_key,
                                           std::span<const KeyPerturbation> deltas,
                                           MetricKind metric);

/// The known-plaintext attacker's stream-cipher hypothesis: the keystream is
/// the per-pixel XOR of a known plain/cipher pair.
GrayImage extract_keystream(const GrayImage& plain, const GrayImage& cipher);

/// Applies an extracted keystream to a ciphertext (per-pixel XOR). Recovers
/// the source pair exactly; transfers to no other image, because no fixed
/// keystream exists for a substitution stage with ciphertext feedback.
GrayImage apply_keystream(const GrayImage& keystream, const GrayImage& cipher);

}  // namespace chaolut
