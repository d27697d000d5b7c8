#include "dnacipher/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "dnacipher/cipher.hpp"
#include "dnacipher/error.hpp"
#include "dnacipher/metrics.hpp"

namespace dnacipher::cli {

namespace {

struct Config {
  std::string input_path;
  std::string output_path;
  std::string key_path;
  std::string sbox_path;
  std::string report_path;
  std::string seed_text;
  bool dump_dna = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidKey:
    case ErrorCode::kDegenerateStream:
      return kExitKey;
    default:
      return kExitIo;
  }
}

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  if (std::filesystem::equivalent(a, b, ec)) return true;
  return std::filesystem::weakly_canonical(a, ec) == std::filesystem::weakly_canonical(b, ec);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path);
}

SBoxSet boxes_for(const Config& cfg) {
  return cfg.sbox_path.empty() ? default_sbox_set() : load_sbox_set(cfg.sbox_path);
}

void run_cipher(const Config& cfg, bool encrypting, std::ostream& err) {
  if (same_file(cfg.input_path, cfg.output_path)) {
    throw UsageError("--out must differ from --in");
  }
  const CipherKey key = load_key(cfg.key_path);
  const SBoxSet boxes = boxes_for(cfg);
  std::vector<std::string> warnings;
  const PixelGrid input = load_pgm(cfg.input_path, &warnings);
  for (const auto& w : warnings) err << "warning: " << cfg.input_path << ": " << w << '\n';

  PipelineProbe probe;
  probe.capture_dna = cfg.dump_dna;
  const PixelGrid output =
      encrypting ? encrypt(input, key, boxes, &probe) : decrypt(input, key, boxes, &probe);
  save_pgm(cfg.output_path, output);

  if (cfg.dump_dna && probe.dna) {
    const std::string dna_path = cfg.output_path + ".dna.txt";
    write_text(dna_path, probe.dna->symbols() + "\n");
    err << "debug: wrote DNA sequence to " << dna_path << " (do not share: leaks structure)\n";
  }
  err << (encrypting ? "encrypted " : "decrypted ") << input.width() << "x" << input.height()
      << " key " << key_fingerprint(key) << '\n';
}

void run_analyze(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  const PixelGrid grid = load_pgm(cfg.input_path, &warnings);
  for (const auto& w : warnings) err << "warning: " << cfg.input_path << ": " << w << '\n';
  const MetricsReport report = analyze(grid);
  for (const auto* c : {&report.corr_horizontal, &report.corr_vertical, &report.corr_diagonal}) {
    if (c->condition) {
      err << "note: correlation not defined (" << to_string(*c->condition) << ")\n";
      break;
    }
  }
  const std::string json = to_json(report);
  if (cfg.report_path.empty()) {
    out << json;
  } else {
    if (same_file(cfg.input_path, cfg.report_path)) throw UsageError("--report must differ from --in");
    write_text(cfg.report_path, json);
  }
}

void run_keygen(const Config& cfg, const CLI::Option* seed_opt) {
  const CipherKey key = seed_opt->count() > 0 ? keygen(cfg.seed_text) : keygen();
  save_key(cfg.output_path, key);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Keyed grayscale image cipher: snake permutation, DNA coding, chaotic S-box substitution"};
  app.name(args.empty() ? "dnacipher" : args.front());
  app.require_subcommand(1);

  auto add_cipher = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--in", cfg.input_path, "input PGM (P5, maxval 255)")->required();
    sub->add_option("--out", cfg.output_path, "output PGM")->required();
    sub->add_option("--key", cfg.key_path, "key file")->required();
    sub->add_option("--sbox", cfg.sbox_path, "S-box file (3 x 256 integers); defaults built in");
    sub->add_flag("--dump-dna", cfg.dump_dna, "debug: write the shuffled DNA sequence to <out>.dna.txt");
    return sub;
  };
  auto* enc = add_cipher("encrypt", "encrypt a PGM image");
  auto* dec = add_cipher("decrypt", "decrypt a PGM image");

  auto* ana = app.add_subcommand("analyze", "print statistical metrics as JSON");
  ana->add_option("--in", cfg.input_path, "input PGM")->required();
  ana->add_option("--report", cfg.report_path, "write the JSON report here instead of stdout");

  auto* gen = app.add_subcommand("keygen", "write a fresh random key file");
  gen->add_option("--out", cfg.output_path, "key file to write")->required();
  auto* seed_opt = gen->add_option("--seed", cfg.seed_text, "derive the key deterministically from this text");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (enc->parsed()) {
      run_cipher(cfg, true, err);
    } else if (dec->parsed()) {
      run_cipher(cfg, false, err);
    } else if (ana->parsed()) {
      run_analyze(cfg, out, err);
    } else if (gen->parsed()) {
      run_keygen(cfg, seed_opt);
    }
  } catch (const UsageError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace dnacipher::cli
