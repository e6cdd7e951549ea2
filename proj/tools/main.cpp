#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaolut/analysis.hpp"
#include "chaolut/cipher.hpp"
#include "chaolut/error.hpp"
#include "chaolut/lcg.hpp"
#include "chaolut/metrics.hpp"
#include "chaolut/pgm.hpp"
#include "chaolut/report.hpp"

namespace fs = std::filesystem;
using namespace chaolut;

namespace {

// Exit codes: 0 ok, 1 usage, 2 I/O, 3 validation, 4 cipher failure.
int exit_code_for(Errc code) {
  switch (code) {
    case Errc::degenerate_orbit:
      return 4;
    case Errc::io_failure:
    case Errc::bad_magic:
    case Errc::bad_header:
    case Errc::truncated_data:
    case Errc::unsupported_maxval:
      return 2;
    default:
      return 3;
  }
}

/// Shortest round-trip decimal form; locale-independent and identical on
/// every platform for identical doubles.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_failure, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_failure, "cannot create " + path);
  out << text;
  if (!out) throw Error(Errc::io_failure, "write failed for " + path);
}

SecretKey load_key_file(const std::string& path) {
  std::string text = read_text_file(path);
  while (!text.empty() &&
         (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.pop_back();
  }
  return parse_key(text);
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::pair<std::uint32_t, std::uint32_t> center_of(const GrayImage& img) {
  return {img.height() / 2, img.width() / 2};
}

std::pair<std::uint32_t, std::uint32_t> parse_change_pos(const std::string& s) {
  const auto comma = s.find(',');
  std::uint32_t row = 0, col = 0;
  if (comma != std::string::npos) {
    const auto r1 = std::from_chars(s.data(), s.data() + comma, row);
    const auto r2 =
        std::from_chars(s.data() + comma + 1, s.data() + s.size(), col);
    if (r1.ec == std::errc{} && r1.ptr == s.data() + comma &&
        r2.ec == std::errc{} && r2.ptr == s.data() + s.size()) {
      return {row, col};
    }
  }
  throw CLI::ValidationError("--change-pos", "expected ROW,COL");
}

std::string matrix_csv(const SensitivityMatrix& m) {
  std::string csv;
  for (const auto& label : m.labels) {
    csv += ",";
    csv += label;
  }
  csv += "\n";
  for (std::size_t r = 0; r < m.cells.size(); ++r) {
    csv += m.labels[r];
    for (double v : m.cells[r]) {
      csv += ",";
      csv += fmt(v);
    }
    csv += "\n";
  }
  return csv;
}

nlohmann::ordered_json matrix_json(const SensitivityMatrix& m) {
  nlohmann::ordered_json j;
  j["labels"] = m.labels;
  j["cells"] = m.cells;
  return j;
}

void write_scatter_csv(const std::string& path, const PixelPairSample& sample) {
  std::string csv;
  for (const auto& [x, y] : sample.pairs) {
    csv += std::to_string(x);
    csv += ",";
    csv += std::to_string(y);
    csv += "\n";
  }
  write_text_file(path, csv);
}

void write_histogram_csv(const std::string& path, const Histogram256& hist) {
  std::string csv;
  for (int v = 0; v < 256; ++v) {
    csv += std::to_string(v);
    csv += ",";
    csv += std::to_string(hist.counts[v]);
    csv += "\n";
  }
  write_text_file(path, csv);
}

constexpr std::uint64_t kDefaultSampleSeed = 1;

struct DirectionName {
  Direction direction;
  const char* name;
};
constexpr DirectionName kDirections[] = {
    {Direction::horizontal, "horizontal"},
    {Direction::vertical, "vertical"},
    {Direction::diagonal, "diagonal"},
};

int run_keygen(const std::string& out, std::optional<std::uint64_t> seed) {
  std::uint64_t s;
  if (seed) {
    s = *seed;
  } else {
    std::random_device rd;
    s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  Lcg64 rng(s);
  const double x0 = 0.1 + 0.8 * rng.next_unit();
  const double mu0 = 3.9 + 0.1 * rng.next_unit();
  const double x0xor = 0.1 + 0.8 * rng.next_unit();
  const double mu0xor = 3.9 + 0.1 * rng.next_unit();
  const SecretKey key{x0, mu0, x0xor, mu0xor};
  validate_key(key);
  write_text_file(out, serialize_key(key) + "\n");
  return 0;
}

int run_encrypt(const std::string& in, const std::string& key_path,
                const std::string& out, bool decrypting) {
  const GrayImage input = load_pgm_file(in);
  const SecretKey key = load_key_file(key_path);
  save_pgm_file(out, decrypting ? decrypt(input, key) : encrypt(input, key));
  return 0;
}

int run_analyze(const std::string& plain_path, const std::string& key_path,
                std::uint64_t sample_seed,
                const std::optional<std::string>& change_pos,
                const std::string& out) {
  const GrayImage plain = load_pgm_file(plain_path);
  const SecretKey key = load_key_file(key_path);
  auto [row, col] = change_pos ? parse_change_pos(*change_pos)
                               : center_of(plain);
  const AnalysisReport report =
      analyze_image(plain, key, sample_seed, row, col);
  validate_report(report);
  write_json_file(out, report_to_json(report));
  return 0;
}

int run_sensitivity(const std::string& plain_path, const std::string& key_path,
                    double delta, const std::string& out_dir) {
  const GrayImage plain = load_pgm_file(plain_path);
  const SecretKey key = load_key_file(key_path);
  const KeyPerturbation deltas[] = {
      {KeyComponent::x0, delta},
      {KeyComponent::mu0, delta},
      {KeyComponent::x0xor, delta},
      {KeyComponent::mu0xor, delta},
  };
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::io_failure, "cannot create " + out_dir);

  nlohmann::ordered_json all;
  all["delta"] = delta;
  all["key_fingerprint"] = key_fingerprint(key);
  constexpr std::pair<MetricKind, const char*> kMetrics[] = {
      {MetricKind::npcr, "npcr"},
      {MetricKind::uaci, "uaci"},
      {MetricKind::mae, "mae"},
  };
  for (const auto& [kind, name] : kMetrics) {
    const auto cm = cipher_key_sensitivity(plain, key, deltas, kind);
    const auto dm = decipher_key_sensitivity(plain, key, deltas, kind);
    write_text_file(out_dir + "/cipher_" + name + ".csv", matrix_csv(cm));
    write_text_file(out_dir + "/decipher_" + name + ".csv", matrix_csv(dm));
    all["cipher"][name] = matrix_json(cm);
    all["decipher"][name] = matrix_json(dm);
  }
  write_json_file(out_dir + "/sensitivity.json", all);
  return 0;
}

int run_attack_demo(const std::string& known_path, const std::string& other_path,
                    const std::string& key_path, const std::string& out) {
  const GrayImage known_plain = load_pgm_file(known_path);
  const GrayImage other_plain = load_pgm_file(other_path);
  const SecretKey key = load_key_file(key_path);

  const GrayImage known_cipher = encrypt(known_plain, key);
  const GrayImage other_cipher = encrypt(other_plain, key);
  const GrayImage keystream = extract_keystream(known_plain, known_cipher);
  const GrayImage recovered = apply_keystream(keystream, known_cipher);
  const GrayImage transferred = apply_keystream(keystream, other_cipher);

  nlohmann::ordered_json j;
  j["key_fingerprint"] = key_fingerprint(key);
  j["source_recovery_npcr"] = npcr(recovered, known_plain);
  j["transfer_npcr"] = npcr(transferred, other_plain);
  write_json_file(out, j);
  return 0;
}

int run_plotdata(const std::string& in, const std::optional<std::string>& key_path,
                 const std::string& out_dir) {
  const GrayImage plain = load_pgm_file(in);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::io_failure, "cannot create " + out_dir);

  auto emit = [&](const GrayImage& img, const std::string& tag) {
    write_histogram_csv(out_dir + "/histogram_" + tag + ".csv", histogram(img));
    for (const auto& [dir, name] : kDirections) {
      write_scatter_csv(
          out_dir + "/scatter_" + tag + "_" + name + ".csv",
          sample_adjacent_pairs(img, dir, kDefaultPairCount, kDefaultSampleSeed));
    }
  };
  emit(plain, "plain");
  if (key_path) {
    emit(encrypt(plain, load_key_file(*key_path)), "encrypted");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chaotic image cipher with a dynamic per-pixel substitution "
               "table, plus its statistical analysis suite"};
  app.require_subcommand(1);

  auto* keygen = app.add_subcommand("keygen", "write a random key file");
  std::string kg_out;
  std::optional<std::uint64_t> kg_seed;
  keygen->add_option("--out", kg_out, "key file to write")->required();
  keygen->add_option("--seed", kg_seed, "generator seed for reproducible keys");

  std::string enc_in, enc_key, enc_out;
  auto* enc = app.add_subcommand("encrypt", "encrypt a PGM image");
  enc->add_option("--in", enc_in, "input PGM")->required();
  enc->add_option("--key", enc_key, "key file")->required();
  enc->add_option("--out", enc_out, "output PGM")->required();

  std::string dec_in, dec_key, dec_out;
  auto* dec = app.add_subcommand("decrypt", "decrypt a PGM image");
  dec->add_option("--in", dec_in, "input PGM")->required();
  dec->add_option("--key", dec_key, "key file")->required();
  dec->add_option("--out", dec_out, "output PGM")->required();

  std::string an_plain, an_key, an_out;
  std::uint64_t an_seed = kDefaultSampleSeed;
  std::optional<std::string> an_pos;
  auto* an = app.add_subcommand("analyze", "run the metric battery, emit JSON");
  an->add_option("--plain", an_plain, "plain PGM")->required();
  an->add_option("--key", an_key, "key file")->required();
  an->add_option("--sample-seed", an_seed, "pair-sampling seed");
  an->add_option("--change-pos", an_pos, "ROW,COL of the +1 pixel change "
                                         "(default: image center)");
  an->add_option("--out", an_out, "report JSON path")->required();

  std::string se_plain, se_key, se_out;
  double se_delta = 1e-15;
  auto* se = app.add_subcommand("sensitivity",
                                "key-sensitivity matrices as CSV/JSON");
  se->add_option("--plain", se_plain, "plain PGM")->required();
  se->add_option("--key", se_key, "key file")->required();
  se->add_option("--delta", se_delta, "per-component perturbation");
  se->add_option("--out", se_out, "output directory")->required();

  std::string at_known, at_other, at_key, at_out;
  auto* at = app.add_subcommand("attack-demo",
                                "known-plaintext keystream attack demo");
  at->add_option("--known-plain", at_known, "attacker's known plain PGM")
      ->required();
  at->add_option("--other-plain", at_other, "target plain PGM")->required();
  at->add_option("--key", at_key, "key file")->required();
  at->add_option("--out", at_out, "report JSON path")->required();

  std::string pd_in, pd_out;
  std::optional<std::string> pd_key;
  auto* pd = app.add_subcommand("plotdata",
                                "histogram and correlation-scatter CSV data");
  pd->add_option("--in", pd_in, "input PGM")->required();
  pd->add_option("--key", pd_key, "key file: also emit ciphertext data");
  pd->add_option("--out", pd_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*keygen) return run_keygen(kg_out, kg_seed);
    if (*enc) return run_encrypt(enc_in, enc_key, enc_out, false);
    if (*dec) return run_encrypt(dec_in, dec_key, dec_out, true);
    if (*an) return run_analyze(an_plain, an_key, an_seed, an_pos, an_out);
    if (*se) return run_sensitivity(se_plain, se_key, se_delta, se_out);
    if (*at) return run_attack_demo(at_known, at_other, at_key, at_out);
    if (*pd) return run_plotdata(pd_in, pd_key, pd_out);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
