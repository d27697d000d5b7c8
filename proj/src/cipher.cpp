#include "dnacipher/cipher.hpp"

#include <cstdio>
#include <random>

#include "dnacipher/error.hpp"
#include "dnacipher/permute.hpp"

namespace dnacipher {

namespace {

struct Keystreams {
  std::vector<double> shuffle_draws;
  std::vector<std::uint8_t> selectors;
  std::vector<std::uint8_t> mask;
};

// Materializes every key-derived value one pipeline run needs, row-major.
Keystreams expand_key(const CipherKey& key, std::size_t pixels) {
  validate_key(key);
  Keystreams ks;
  ks.shuffle_draws = stream(key.shuffle, 4 * pixels - 1);

  LogisticStream selector(key.selector);
  ks.selectors.resize(pixels);
  for (auto& s : ks.selectors) s = static_cast<std::uint8_t>(quantize_selector(selector.next()));

  LogisticStream mask(key.xor_mask);
  ks.mask.resize(pixels);
  for (auto& k : ks.mask) k = quantize_byte(mask.next());
  return ks;
}

void record_usage(PipelineProbe* probe, const Keystreams& ks) {
  if (probe == nullptr) return;
  probe->usage = {ks.shuffle_draws.size(), ks.selectors.size(), ks.mask.size()};
}

}  // namespace

PixelGrid encrypt(const PixelGrid& plain, const CipherKey& key, const SBoxSet& boxes,
                  PipelineProbe* probe) {
  const std::size_t w = plain.width();
  const std::size_t h = plain.height();
  const Keystreams ks = expand_key(key, plain.size());
  record_usage(probe, ks);

  DnaSequence dna = encode_grid(snake(plain));
  keyed_shuffle_in_place(std::span<char>(dna.mutable_symbols()), std::span<const double>(ks.shuffle_draws));
  if (probe != nullptr && probe->capture_dna) probe->dna = dna;

  const PixelGrid mixed = decode_sequence(dna, w, h);
  std::vector<std::uint8_t> out(plain.size());
  const auto px = mixed.pixels();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(substitute(px[i], boxes[ks.selectors[i]]) ^ ks.mask[i]);
  }
  return PixelGrid(w, h, std::move(out));
}

PixelGrid decrypt(const PixelGrid& cipher, const CipherKey& key, const SBoxSet& boxes,
                  PipelineProbe* probe) {
  const std::size_t w = cipher.width();
  const std::size_t h = cipher.height();
  const Keystreams ks = expand_key(key, cipher.size());
  record_usage(probe, ks);

  std::vector<std::uint8_t> unmasked(cipher.size());
  const auto px = cipher.pixels();
  for (std::size_t i = 0; i < unmasked.size(); ++i) {
    unmasked[i] = substitute_inverse(static_cast<std::uint8_t>(px[i] ^ ks.mask[i]),
                                     boxes[ks.selectors[i]]);
  }

  DnaSequence dna = invert_decode(PixelGrid(w, h, std::move(unmasked)));
  if (probe != nullptr && probe->capture_dna) probe->dna = dna;

  // The trace is rebuilt by replaying the same draws on an index-free
  // sequence: Fisher-Yates targets depend only on the draws and the length.
  ShuffleTrace trace;
  trace.swaps.reserve(ks.shuffle_draws.size());
  const std::size_t length = dna.size();
  for (std::size_t i = 0; i < ks.shuffle_draws.size(); ++i) {
    trace.swaps.emplace_back(i, shuffle_target(i, length, ks.shuffle_draws[i]));
  }
  invert_shuffle_in_place(std::span<char>(dna.mutable_symbols()), trace);

  return snake(invert_encode(dna, w, h));
}

std::string key_fingerprint(const CipherKey& key) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : format_key(key)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

CipherOutput encrypt_with_fingerprint(const PixelGrid& plain, const CipherKey& key,
                                      const SBoxSet& boxes) {
  return {encrypt(plain, key, boxes), key_fingerprint(key)};
}

namespace {

constexpr std::size_t kKeygenProbeIterates = 2000;

bool survives(const LogisticParams& p) {
  try {
    LogisticStream s(p);
    for (std::size_t i = 0; i < kKeygenProbeIterates; ++i) s.next();
    return true;
  } catch (const Error&) {
    return false;
  }
}

LogisticParams draw_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r_dist(3.9, 4.0);
  std::uniform_real_distribution<double> x_dist(0.1, 0.9);
  for (;;) {
    LogisticParams p{r_dist(rng), x_dist(rng), kDefaultBurnIn};
    if (p.x0 > 0.1 && survives(p)) return p;
  }
}

}  // namespace

CipherKey keygen(std::optional<std::string_view> seed_text) {
  std::mt19937_64 rng;
  if (seed_text) {
    std::vector<std::uint32_t> words;
    for (const char c : *seed_text) words.push_back(static_cast<unsigned char>(c));
    std::seed_seq seq(words.begin(), words.end());
    rng.seed(seq);
  } else {
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
    rng.seed(seq);
  }
  CipherKey key;
  key.selector = draw_params(rng);
  key.shuffle = draw_params(rng);
  key.xor_mask = draw_params(rng);
  return key;
}

}  // namespace dnacipher
