#include "chaolut/analysis.hpp"

#include <string>
#include <utility>

#include "chaolut/cipher.hpp"
#include "chaolut/error.hpp"

namespace chaolut {

double metric_value(MetricKind kind, const GrayImage& a, const GrayImage& b) {
  switch (kind) {
    case MetricKind::npcr: return npcr(a, b);
    case MetricKind::uaci: return uaci(a, b);
    case MetricKind::mae:  return mae(a, b);
  }
  throw Error(Errc::out_of_range, "unknown metric kind");
}

SecretKey perturb_key(const SecretKey& key, const KeyPerturbation& p) {
  SecretKey out = key;
  switch (p.component) {
    case KeyComponent::x0:     out.x0 += p.delta; break;
    case KeyComponent::mu0:    out.mu0 += p.delta; break;
    case KeyComponent::x0xor:  out.x0xor += p.delta; break;
    case KeyComponent::mu0xor: out.mu0xor += p.delta; break;
  }
  validate_key(out);
  return out;
}

DiffMetrics plaintext_sensitivity(const GrayImage& image, const SecretKey& key,
                                  std::uint32_t change_row,
                                  std::uint32_t change_col) {
  if (change_row >= image.height() || change_col >= image.width()) {
    throw Error(Errc::out_of_range,
                "change position (" + std::to_string(change_row) + ", " +
                    std::to_string(change_col) + ") outside image");
  }
  GrayImage changed = image;
  changed(change_row, change_col) =
      static_cast<std::uint8_t>(changed(change_row, change_col) + 1);
  const GrayImage c1 = encrypt(image, key);
  const GrayImage c2 = encrypt(changed, key);
  return DiffMetrics{npcr(c1, c2), uaci(c1, c2), mae(c1, c2)};
}

namespace {

SensitivityMatrix pairwise_matrix(std::vector<std::string> labels,
                                  const std::vector<GrayImage>& images,
                                  MetricKind metric) {
  const std::size_t n = images.size();
  SensitivityMatrix m{std::move(labels),
                      std::vector<std::vector<double>>(
                          n, std::vector<double>(n, 0.0)),
                      metric};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double v = metric_value(metric, images[a], images[b]);
      m.cells[a][b] = v;
      m.cells[b][a] = v;
    }
  }
  return m;
}

}  // namespace

SensitivityMatrix cipher_key_sensitivity(const GrayImage& image,
                                         const SecretKey& base_key,
                                         std::span<const KeyPerturbation> deltas,
                                         MetricKind metric) {
  std::vector<GrayImage> images;
  std::vector<std::string> labels;
  images.reserve(deltas.size() + 2);
  images.push_back(encrypt(image, base_key));
  labels.push_back("I_C");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    images.push_back(encrypt(image, perturb_key(base_key, deltas[i])));
    labels.push_back("I_C" + std::to_string(i + 1));
  }
  images.push_back(image);
  labels.push_back("I");
  return pairwise_matrix(std::move(labels), images, metric);
}

SensitivityMatrix decipher_key_sensitivity(const GrayImage& image,
                                           const SecretKey& base_key,
                                           std::span<const KeyPerturbation> deltas,
                                           MetricKind metric) {
  const GrayImage ciphertext = encrypt(image, base_key);
  std::vector<GrayImage> images;
  std::vector<std::string> labels;
  images.reserve(deltas.size() + 2);
  images.push_back(decrypt(ciphertext, base_key));
  labels.push_back("I_D");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    images.push_back(decrypt(ciphertext, perturb_key(base_key, deltas[i])));
    labels.push_back("I_D" + std::to_string(i + 1));
  }
  images.push_back(image);
  labels.push_back("I");
  return pairwise_matrix(std::move(labels), images, metric);
}

namespace {

GrayImage xor_images(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(Errc::dimension_mismatch, "keystream and image sizes differ");
  }
  GrayImage out(a.width(), a.height());
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  const auto po = out.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    po[i] = static_cast<std::uint8_t>(pa[i] ^ pb[i]);
  }
  return out;
}

}  // namespace

GrayImage extract_keystream(const GrayImage& plain, const GrayImage& cipher) {
  return xor_images(plain, cipher);
}

GrayImage apply_keystream(const GrayImage& keystream, const GrayImage& cipher) {
  return xor_images(keystream, cipher);
}

}  // namespace chaolut
