#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dnacipher {

inline constexpr double kMinChaoticR = 3.57;
inline constexpr double kMaxChaoticR = 4.0;
inline constexpr std::size_t kDefaultBurnIn = 1000;

/// Parameters of one logistic-map trajectory x <- r x (1 - x).
struct LogisticParams {
  double r = 3.99;
  double x0 = 0.4;
  std::size_t burn_in = kDefaultBurnIn;

  bool operator==(const LogisticParams&) const = default;
};

/// The secret key: three independent trajectories.
struct CipherKey {
  LogisticParams selector;  // picks one of three S-boxes per pixel
  LogisticParams shuffle;   // drives the DNA symbol shuffle
  LogisticParams xor_mask;  // final keystream

  bool operator==(const CipherKey&) const = default;
};

/// One map iteration, evaluated as (r * x) * (1 - x) in binary64. The
/// association is part of the cipher definition: decryption must
/// regenerate bit-identical states.
inline double logistic_step(double x, double r) noexcept {
  const double t = 1.0 - x;
  return (r * x) * t;
}

/// Sequential iterator over a trajectory. Burn-in is consumed on
/// construction. Throws Error(kDegenerateStream) as soon as an iterate lands
/// exactly on 0 or 1.
class LogisticStream {
 public:
  explicit LogisticStream(const LogisticParams& params);

  double next();
  std::size_t emitted() const noexcept { return emitted_; }

 private:
  double advance();

  double r_;
  double x_;
  std::size_t emitted_ = 0;
};

/// The n states following the burn-in.
std::vector<double> stream(const LogisticParams& params, std::size_t n);

/// min(floor(3x), 2): which of the three S-boxes a pixel uses.
inline int quantize_selector(double x) noexcept {
  const int v = static_cast<int>(x * 3.0);
  return v > 2 ? 2 : v;
}

/// min(floor(256x), 255): one keystream byte.
inline std::uint8_t quantize_byte(double x) noexcept {
  const int v = static_cast<int>(x * 256.0);
  return static_cast<std::uint8_t>(v > 255 ? 255 : v);
}

/// Throws Error(kInvalidKey) naming the first offending field.
void validate_key(const CipherKey& key);

/// Key file: one `name=value` per line with names selector_r, selector_x0,
/// shuffle_r, shuffle_x0, xor_r, xor_x0, burn_in. Blank lines are skipped.
/// All seven names are required; unknown or repeated names are rejected.
CipherKey parse_key(std::string_view text);

/// Canonical key text, values printed with round-trip precision.
/// parse_key(format_key(k)) == k whenever all burn-ins agree.
std::string format_key(const CipherKey& key);

CipherKey load_key(const std::string& path);
void save_key(const std::string& path, const CipherKey& key);

}  // namespace dnacipher
