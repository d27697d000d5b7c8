#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dnacipher/error.hpp"
#include "dnacipher/image_grid.hpp"

namespace dnacipher {

/// Zigzag row order: rows 1, 3, 5, ... (1-based) are kept left to right,
/// rows 2, 4, 6, ... are reversed. An involution.
PixelGrid snake(const PixelGrid& grid);

/// Record of a Fisher-Yates pass. Entry k is the exchange (k, j) with
/// k <= j < L.
struct ShuffleTrace {
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
};

/// Index drawn for position i of a length-L shuffle:
/// i + min(floor(draw * (L - i)), L - i - 1).
inline std::size_t shuffle_target(std::size_t i, std::size_t length, double draw) noexcept {
  const std::size_t remaining = length - i;
  const auto offset = static_cast<std::size_t>(draw * static_cast<double>(remaining));
  return i + (offset < remaining ? offset : remaining - 1);
}

/// In-place Fisher-Yates driven by external draws in (0,1). Needs exactly
/// L - 1 draws (zero for L <= 1).
template <typename T>
ShuffleTrace keyed_shuffle_in_place(std::span<T> seq, std::span<const double> draws) {
  const std::size_t length = seq.size();
  const std::size_t expected = length == 0 ? 0 : length - 1;
  if (draws.size() != expected) {
    throw Error(ErrorCode::kDrawCountMismatch,
                "shuffle of " + std::to_string(length) + " symbols needs " +
                    std::to_string(expected) + " draws, got " + std::to_string(draws.size()));
  }
  ShuffleTrace trace;
  trace.swaps.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    const std::size_t j = shuffle_target(i, length, draws[i]);
    std::swap(seq[i], seq[j]);
    trace.swaps.emplace_back(i, j);
  }
  return trace;
}

template <typename T>
void invert_shuffle_in_place(std::span<T> seq, const ShuffleTrace& trace) {
  const std::size_t expected = seq.empty() ? 0 : seq.size() - 1;
  if (trace.swaps.size() != expected) {
    throw Error(ErrorCode::kTraceLengthMismatch,
                "trace has " + std::to_string(trace.swaps.size()) + " swaps for a sequence of " +
                    std::to_string(seq.size()));
  }
  for (auto it = trace.swaps.rbegin(); it != trace.swaps.rend(); ++it) {
    std::swap(seq[it->first], seq[it->second]);
  }
}

/// Value-returning form over symbol strings.
std::pair<std::string, ShuffleTrace> keyed_shuffle(std::string seq, std::span<const double> draws);
std::string invert_shuffle(std::string seq, const ShuffleTrace& trace);

}  // namespace dnacipher
