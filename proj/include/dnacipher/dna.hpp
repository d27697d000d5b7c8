#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dnacipher/image_grid.hpp"

namespace dnacipher {

/// Nucleotide string over {A, C, G, T}; four symbols per pixel.
class DnaSequence {
 public:
  DnaSequence() = default;
  /// Throws Error(kInvalidSymbol) on anything outside the alphabet.
  explicit DnaSequence(std::string symbols);

  const std::string& symbols() const noexcept { return symbols_; }
  std::string& mutable_symbols() noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }

  bool operator==(const DnaSequence&) const = default;

 private:
  std::string symbols_;
};

/// Two 2-bit codebooks. The pixel-side encoder uses kComplementary
/// (11->A, 00->T, 10->C, 01->G); reconstruction into pixels uses
/// kAlphabetical (A->00, C->01, G->10, T->11). The two disagree on every
/// pair, so decoding an encoded byte yields its bitwise complement.
enum class Codebook { kComplementary, kAlphabetical };

/// Pixels in row-major order, bits MSB-first, two bits per symbol.
DnaSequence encode(const PixelGrid& grid, Codebook book);

/// Four symbols per byte, MSB-first, filled row-major.
/// Throws Error(kLengthMismatch) unless seq.size() == 4 * width * height.
PixelGrid decode(const DnaSequence& seq, std::size_t width, std::size_t height, Codebook book);

/// Forward encoding of a pixel grid (complementary codebook).
inline DnaSequence encode_grid(const PixelGrid& grid) {
  return encode(grid, Codebook::kComplementary);
}

/// Reconstruction of pixels from a sequence (alphabetical codebook).
inline PixelGrid decode_sequence(const DnaSequence& seq, std::size_t width, std::size_t height) {
  return decode(seq, width, height, Codebook::kAlphabetical);
}

/// Inverse of decode_sequence.
inline DnaSequence invert_decode(const PixelGrid& grid) {
  return encode(grid, Codebook::kAlphabetical);
}

/// Inverse of encode_grid.
inline PixelGrid invert_encode(const DnaSequence& seq, std::size_t width, std::size_t height) {
  return decode(seq, width, height, Codebook::kComplementary);
}

}  // namespace dnacipher
