#include "chaolut/cipher.hpp"

#include "chaolut/chaos.hpp"
#include "chaolut/lut.hpp"

namespace chaolut {

GrayImage xor_stage(const GrayImage& image, double x0xor, double mu0xor) {
  ChaosStream stream(x0xor, mu0xor);
  stream.burn_in(kXorBurnIn);
  GrayImage out(image.width(), image.height());
  const auto src = image.pixels();
  const auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] = static_cast<std::uint8_t>(src[i] ^ quantize_byte(stream.next()));
  }
  return out;
}

GrayImage lut_stage_encrypt(const GrayImage& image, double x0, double mu0) {
  validate_params(x0, mu0);
  GrayImage out(image.width(), image.height());
  const auto src = image.pixels();
  const auto dst = out.pixels();
  std::uint8_t pc = quantize_byte(x0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Lut256 lut = generate_pixel_lut(mu0, derive_pixel_seed(x0, pc));
    dst[i] = lut.forward[src[i]];
    pc = dst[i];
  }
  return out;
}

GrayImage lut_stage_decrypt(const GrayImage& image, double x0, double mu0) {
  validate_params(x0, mu0);
  GrayImage out(image.width(), image.height());
  const auto src = image.pixels();
  const auto dst = out.pixels();
  std::uint8_t pc = quantize_byte(x0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Lut256 lut = generate_pixel_lut(mu0, derive_pixel_seed(x0, pc));
    dst[i] = lut.inverse[src[i]];
    pc = src[i];  // feedback comes from the ciphertext side
  }
  return out;
}

GrayImage encrypt(const GrayImage& image, const SecretKey& key) {
  validate_key(key);
  return lut_stage_encrypt(xor_stage(image, key.x0xor, key.mu0xor), key.x0,
                           key.mu0);
}

GrayImage decrypt(const GrayImage& image, const SecretKey& key) {
  validate_key(key);
  return xor_stage(lut_stage_decrypt(image, key.x0, key.mu0), key.x0xor,
                   key.mu0xor);
}

}  // namespace chaolut
