#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "dnacipher/chaos.hpp"
#include "dnacipher/dna.hpp"
#include "dnacipher/image_grid.hpp"
#include "dnacipher/sbox.hpp"

namespace dnacipher {

/// How many states each key stream supplied during one encrypt/decrypt.
struct StreamUsage {
  std::size_t shuffle = 0;
  std::size_t selector = 0;
  std::size_t xor_mask = 0;

  bool operator==(const StreamUsage&) const = default;
};

/// Optional observer for a pipeline run. `dna` is filled with the shuffled
/// sequence only when `capture_dna` is set (debug use: it leaks structure).
struct PipelineProbe {
  bool capture_dna = false;
  StreamUsage usage;
  std::optional<DnaSequence> dna;
};

struct CipherOutput {
  PixelGrid cipher;
  std::string key_fingerprint;
};

/// snake -> DNA encode -> keyed shuffle -> reconstruct -> per-pixel S-box
/// substitution -> XOR keystream. Throws kInvalidKey / kDegenerateStream.
PixelGrid encrypt(const PixelGrid& plain, const CipherKey& key, const SBoxSet& boxes,
                  PipelineProbe* probe = nullptr);

/// Stage-wise inverse of encrypt, applied in reverse order.
PixelGrid decrypt(const PixelGrid& cipher, const CipherKey& key, const SBoxSet& boxes,
                  PipelineProbe* probe = nullptr);

CipherOutput encrypt_with_fingerprint(const PixelGrid& plain, const CipherKey& key,
                                      const SBoxSet& boxes);

/// 16 hex digits of FNV-1a over format_key(key). Diagnostic only.
std::string key_fingerprint(const CipherKey& key);

/// Random key: r in [3.9, 4.0), x0 in (0.1, 0.9), burn-in 1000. Candidates
/// whose trajectories degenerate within 2000 iterates are redrawn. With
/// seed text the result is a deterministic function of it.
CipherKey keygen(std::optional<std::string_view> seed_text = std::nullopt);

}  // namespace dnacipher
