#include "chaolut/report.hpp"

#include <cmath>

#include "chaolut/analysis.hpp"
#include "chaolut/cipher.hpp"
#include "chaolut/error.hpp"

namespace chaolut {

std::string key_fingerprint(const SecretKey& key) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (char c : serialize_key(key)) {
    hash ^= static_cast<std::uint8_t>(c);
    hash *= 1099511628211ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kDigits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

AnalysisReport analyze_image(const GrayImage& plain, const SecretKey& key,
                             std::uint64_t sample_seed,
                             std::uint32_t change_row, std::uint32_t change_col,
                             std::uint32_t pairs_per_direction) {
  const GrayImage cipher = encrypt(plain, key);

  auto corr = [&](const GrayImage& img, Direction d) {
    return correlation(
        sample_adjacent_pairs(img, d, pairs_per_direction, sample_seed));
  };

  AnalysisReport report;
  report.entropy = entropy(cipher);
  report.chi_square = chi_square_uniformity(histogram(cipher));
  report.horizontal = {corr(plain, Direction::horizontal),
                       corr(cipher, Direction::horizontal)};
  report.vertical = {corr(plain, Direction::vertical),
                     corr(cipher, Direction::vertical)};
  report.diagonal = {corr(plain, Direction::diagonal),
                     corr(cipher, Direction::diagonal)};
  report.diff = plaintext_sensitivity(plain, key, change_row, change_col);
  report.key_space_bits = 256;
  report.key_fingerprint = key_fingerprint(key);
  report.sample_seed = sample_seed;
  report.pairs_per_direction = pairs_per_direction;
  report.change_row = change_row;
  report.change_col = change_col;
  return report;
}

void validate_report(const AnalysisReport& r) {
  auto in_range = [](double v, double lo, double hi) {
    return std::isfinite(v) && v >= lo && v <= hi;
  };
  const bool ok =
      in_range(r.entropy, 0.0, 8.0) && in_range(r.chi_square, 0.0, 1e18) &&
      in_range(r.horizontal.plain, -1.0, 1.0) &&
      in_range(r.horizontal.encrypted, -1.0, 1.0) &&
      in_range(r.vertical.plain, -1.0, 1.0) &&
      in_range(r.vertical.encrypted, -1.0, 1.0) &&
      in_range(r.diagonal.plain, -1.0, 1.0) &&
      in_range(r.diagonal.encrypted, -1.0, 1.0) &&
      in_range(r.diff.npcr, 0.0, 100.0) && in_range(r.diff.uaci, 0.0, 100.0) &&
      in_range(r.diff.mae, 0.0, 255.0) && r.key_space_bits == 256 &&
      r.key_fingerprint.size() == 16;
  if (!ok) {
    throw Error(Errc::out_of_range, "analysis report violates metric ranges");
  }
}

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["entropy"] = r.entropy;
  j["chi_square"] = r.chi_square;
  j["correlations"] = {
      {"horizontal", {{"plain", r.horizontal.plain},
                      {"encrypted", r.horizontal.encrypted}}},
      {"vertical", {{"plain", r.vertical.plain},
                    {"encrypted", r.vertical.encrypted}}},
      {"diagonal", {{"plain", r.diagonal.plain},
                    {"encrypted", r.diagonal.encrypted}}},
  };
  j["diff"] = {{"npcr", r.diff.npcr},
               {"uaci", r.diff.uaci},
               {"mae", r.diff.mae}};
  j["key_space_bits"] = r.key_space_bits;
  j["parameters"] = {{"key_fingerprint", r.key_fingerprint},
                     {"sample_seed", r.sample_seed},
                     {"pairs_per_direction", r.pairs_per_direction},
                     {"change_row", r.change_row},
                     {"change_col", r.change_col}};
  return j;
}

AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  AnalysisReport r;
  r.entropy = j.at("entropy").get<double>();
  r.chi_square = j.at("chi_square").get<double>();
  const auto& corr = j.at("correlations");
  auto pair_of = [&](const char* dir) {
    return CorrelationPair{corr.at(dir).at("plain").get<double>(),
                           corr.at(dir).at("encrypted").get<double>()};
  };
  r.horizontal = pair_of("horizontal");
  r.vertical = pair_of("vertical");
  r.diagonal = pair_of("diagonal");
  const auto& diff = j.at("diff");
  r.diff = DiffMetrics{diff.at("npcr").get<double>(),
                       diff.at("uaci").get<double>(),
                       diff.at("mae").get<double>()};
  r.key_space_bits = j.at("key_space_bits").get<int>();
  const auto& params = j.at("parameters");
  r.key_fingerprint = params.at("key_fingerprint").get<std::string>();
  r.sample_seed = params.at("sample_seed").get<std::uint64_t>();
  r.pairs_per_direction = params.at("pairs_per_direction").get<std::uint32_t>();
  r.change_row = params.at("change_row").get<std::uint32_t>();
  r.change_col = params.at("change_col").get<std::uint32_t>();
  return r;
}

}  // namespace chaolut
