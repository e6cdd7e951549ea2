#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "chaolut/image.hpp"
#include "chaolut/key.hpp"
#include "chaolut/metrics.hpp"

namespace chaolut {

struct CorrelationPair {
  double plain;
  double encrypted;
};

/// Aggregated security measurements of one plain/key combination, together
/// with every parameter needed to reproduce them.
struct AnalysisReport {
  double entropy;      ///< ciphertext entropy, bits/pixel
  double chi_square;   ///< ciphertext histogram vs uniform, df=255
  CorrelationPair horizontal;
  CorrelationPair vertical;
  CorrelationPair diagonal;
  DiffMetrics diff;    ///< single-pixel-change differential metrics
  int key_space_bits;  ///< 4 components x 64 bits
  std::string key_fingerprint;
  std::uint64_t sample_seed;
  std::uint32_t pairs_per_direction;
  std::uint32_t change_row;
  std::uint32_t change_col;
};

inline constexpr std::uint32_t kDefaultPairCount = 2500;

/// FNV-1a 64 over the serialized key, as 16 hex characters. Identifies a key
/// in reports without disclosing it.
std::string key_fingerprint(const SecretKey& key);

/// Runs the full metric battery: encrypts the image, measures ciphertext
/// entropy and chi-square, adjacent-pair correlations of both images in all
/// three directions, and the differential metrics for a +1 change at
/// (change_row, change_col).
AnalysisReport analyze_image(const GrayImage& plain, const SecretKey& key,
                             std::uint64_t sample_seed,
                             std::uint32_t change_row, std::uint32_t change_col,
                             std::uint32_t pairs_per_direction = kDefaultPairCount);

/// Throws unless every metric in the report is within its valid range.
void validate_report(const AnalysisReport& report);

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace chaolut
