#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace dnacipher {

/// A bijective byte substitution, viewed as a 16x16 grid: row = high
/// nibble, column = low nibble.
class SBox {
 public:
  using Table = std::array<std::uint8_t, 256>;

  /// Throws Error(kInvalidSBox) unless `table` is a permutation of 0..255.
  explicit SBox(const Table& table);

  /// Grid entry at 1-based (row, col), each in 1..16.
  std::uint8_t cell(std::size_t row, std::size_t col) const { return table_[(row - 1) * 16 + (col - 1)]; }

  const Table& table() const noexcept { return table_; }
  const Table& inverse() const noexcept { return inverse_; }

  bool operator==(const SBox&) const = default;

 private:
  Table table_;
  Table inverse_;
};

/// Splits b into nibbles (h, l) and reads the grid at (h + 1, l + 1).
inline std::uint8_t substitute(std::uint8_t b, const SBox& box) {
  return box.cell(static_cast<std::size_t>(b >> 4) + 1, static_cast<std::size_t>(b & 0x0F) + 1);
}

inline std::uint8_t substitute_inverse(std::uint8_t c, const SBox& box) {
  return box.inverse()[c];
}

inline constexpr std::size_t kSBoxCount = 3;
using SBoxSet = std::array<SBox, kSBoxCount>;

/// Rijndael S-box: GF(2^8) inverse (mod x^8+x^4+x^3+x+1) followed by the
/// affine map with constant 0x63. Computed, not tabulated.
SBox::Table aes_sbox_table();

/// {S, S o S, S ^ 0x5A} with S the Rijndael S-box.
SBoxSet default_sbox_set();

/// Text format: 3 x 256 whitespace-separated integers in 0..255, each block
/// a permutation. Throws Error(kInvalidSBox).
SBoxSet parse_sbox_set(std::string_view text);
SBoxSet load_sbox_set(const std::string& path);

}  // namespace dnacipher
