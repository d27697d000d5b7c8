#include "dnacipher/permute.hpp"

#include <algorithm>

namespace dnacipher {

PixelGrid snake(const PixelGrid& grid) {
  std::vector<std::uint8_t> out(grid.pixels().begin(), grid.pixels().end());
  const std::size_t w = grid.width();
  // 0-based row r is 1-based row r + 1, so odd r is an even (reversed) row.
  for (std::size_t r = 1; r < grid.height(); r += 2) {
    auto first = out.begin() + static_cast<std::ptrdiff_t>(r * w);
    std::reverse(first, first + static_cast<std::ptrdiff_t>(w));
  }
  return PixelGrid(grid.width(), grid.height(), std::move(out));
}

std::pair<std::string, ShuffleTrace> keyed_shuffle(std::string seq, std::span<const double> draws) {
  auto trace = keyed_shuffle_in_place(std::span<char>(seq), draws);
  return {std::move(seq), std::move(trace)};
}

std::string invert_shuffle(std::string seq, const ShuffleTrace& trace) {
  invert_shuffle_in_place(std::span<char>(seq), trace);
  return seq;
}

}  // namespace dnacipher
