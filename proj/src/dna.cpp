#include "dnacipher/dna.hpp"

#include <array>

#include "dnacipher/error.hpp"

namespace dnacipher {

namespace {

// Symbol for each 2-bit value 0b00..0b11.
constexpr std::array<char, 4> kComplementarySymbols = {'T', 'G', 'C', 'A'};
constexpr std::array<char, 4> kAlphabeticalSymbols = {'A', 'C', 'G', 'T'};

const std::array<char, 4>& symbols_for(Codebook book) {
  return book == Codebook::kComplementary ? kComplementarySymbols : kAlphabeticalSymbols;
}

// 2-bit value for each symbol, -1 outside the alphabet.
std::array<int, 256> value_table(Codebook book) {
  std::array<int, 256> table;
  table.fill(-1);
  const auto& syms = symbols_for(book);
  for (int v = 0; v < 4; ++v) table[static_cast<unsigned char>(syms[v])] = v;
  return table;
}

}  // namespace

DnaSequence::DnaSequence(std::string symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (c != 'A' && c != 'C' && c != 'G' && c != 'T') {
      throw Error(ErrorCode::kInvalidSymbol,
                  "symbol at " + std::to_string(i) + " is not one of A, C, G, T");
    }
  }
}

DnaSequence encode(const PixelGrid& grid, Codebook book) {
  const auto& syms = symbols_for(book);
  std::string out(grid.size() * 4, '\0');
  std::size_t k = 0;
  for (const std::uint8_t px : grid.pixels()) {
    out[k++] = syms[(px >> 6) & 3];
    out[k++] = syms[(px >> 4) & 3];
    out[k++] = syms[(px >> 2) & 3];
    out[k++] = syms[px & 3];
  }
  DnaSequence seq;
  seq.mutable_symbols() = std::move(out);
  return seq;
}

PixelGrid decode(const DnaSequence& seq, std::size_t width, std::size_t height, Codebook book) {
  if (width == 0 || height == 0 || seq.size() != 4 * width * height) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(seq.size()) + " symbols cannot fill a " + std::to_string(width) +
                    "x" + std::to_string(height) + " grid");
  }
  static const std::array<int, 256> kComplementaryValues = value_table(Codebook::kComplementary);
  static const std::array<int, 256> kAlphabeticalValues = value_table(Codebook::kAlphabetical);
  const auto& values = book == Codebook::kComplementary ? kComplementaryValues : kAlphabeticalValues;

  const std::string& s = seq.symbols();
  std::vector<std::uint8_t> pixels(width * height);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    int byte = 0;
    for (std::size_t q = 0; q < 4; ++q) {
      const int v = values[static_cast<unsigned char>(s[4 * i + q])];
      if (v < 0) throw Error(ErrorCode::kInvalidSymbol, "symbol at " + std::to_string(4 * i + q));
      byte = (byte << 2) | v;
    }
    pixels[i] = static_cast<std::uint8_t>(byte);
  }
  return PixelGrid(width, height, std::move(pixels));
}

}  // namespace dnacipher
