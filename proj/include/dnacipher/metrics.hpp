#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "dnacipher/error.hpp"
#include "dnacipher/image_grid.hpp"

namespace dnacipher {

enum class Direction { kHorizontal, kVertical, kDiagonal };

/// Pearson coefficient over every in-bounds neighbour pair in `dir`.
/// Throws Error(kZeroVariance) if either margin is constant and
/// Error(kInsufficientPairs) if the grid has no pair in that direction.
double correlation(const PixelGrid& grid, Direction dir);

/// Shannon entropy of the 256-bin histogram, in bits.
double entropy(const PixelGrid& grid);

inline constexpr std::size_t kGlcmLevels = 8;

struct GlcmMatrix {
  std::array<std::array<std::uint64_t, kGlcmLevels>, kGlcmLevels> counts{};
  std::array<std::array<double, kGlcmLevels>, kGlcmLevels> probabilities{};
  std::uint64_t pairs = 0;
};

/// 8-level (v / 32) co-occurrence of each pixel with its right neighbour,
/// non-symmetric, normalized by M * (N - 1). Needs width >= 2.
GlcmMatrix glcm(const PixelGrid& grid);

double homogeneity(const GlcmMatrix& g);
double contrast(const GlcmMatrix& g);
double energy(const GlcmMatrix& g);

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const PixelGrid& grid);

/// Sum over bins of (count - E)^2 / E with E = total / 256.
double chi_square(const Histogram& hist);

/// A correlation value, or the condition that prevented computing one.
struct CorrelationResult {
  std::optional<double> value;
  std::optional<ErrorCode> condition;
};

struct MetricsReport {
  double entropy = 0.0;
  CorrelationResult corr_horizontal;
  CorrelationResult corr_vertical;
  CorrelationResult corr_diagonal;
  double contrast = 0.0;
  double homogeneity = 0.0;
  double energy = 0.0;
  Histogram histogram{};
  double chi_square = 0.0;
};

/// Needs width >= 2 for the GLCM terms.
MetricsReport analyze(const PixelGrid& grid);

/// Flat JSON object, field names as in MetricsReport, numbers at 17
/// significant digits. A missing correlation is written as its condition
/// name, e.g. "ZeroVariance".
std::string to_json(const MetricsReport& report);

}  // namespace dnacipher
