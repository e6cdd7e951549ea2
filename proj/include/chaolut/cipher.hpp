#pragma once

#include "chaolut/image.hpp"
#include "chaolut/key.hpp"

namespace chaolut {

/// Map iterations discarded once per image before the XOR keystream starts,
/// so the non-chaotic transient never reaches the ciphertext.
inline constexpr int kXorBurnIn = 1000;

/// XOR pre-whitening: one quantized map iterate per pixel in raster order
/// (row-major, left to right, top to bottom). Its own inverse: applying it
/// twice with the same parameters returns the input.
GrayImage xor_stage(const GrayImage& image, double x0xor, double mu0xor);

/// Substitution stage with ciphertext feedback. The feedback byte pc starts
/// at quantize_byte(x0); each pixel is mapped through a fresh table seeded
/// by derive_pixel_seed(x0, pc), and pc becomes the emitted ciphertext byte.
GrayImage lut_stage_encrypt(const GrayImage& image, double x0, double mu0);

/// Exact inverse of lut_stage_encrypt. Decryption is possible pixel by pixel
/// because the feedback byte is read from the ciphertext itself.
GrayImage lut_stage_decrypt(const GrayImage& image, double x0, double mu0);

/// Full cipher: XOR stage under (x0xor, mu0xor), then substitution stage
/// under (x0, mu0). Output dimensions equal input dimensions.
GrayImage encrypt(const GrayImage& image, const SecretKey& key);

/// Exact reverse composition of encrypt.
GrayImage decrypt(const GrayImage& image, const SecretKey& key);

}  // namespace chaolut
