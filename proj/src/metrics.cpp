#include "dnacipher/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace dnacipher {

namespace {

struct Offset {
  std::size_t dr;
  std::size_t dc;
};

Offset offset_of(Direction dir) {
  switch (dir) {
    case Direction::kHorizontal: return {0, 1};
    case Direction::kVertical: return {1, 0};
    case Direction::kDiagonal: return {1, 1};
  }
  return {0, 1};
}

const char* name_of(Direction dir) {
  switch (dir) {
    case Direction::kHorizontal: return "horizontal";
    case Direction::kVertical: return "vertical";
    case Direction::kDiagonal: return "diagonal";
  }
  return "?";
}

}  // namespace

double correlation(const PixelGrid& grid, Direction dir) {
  const auto [dr, dc] = offset_of(dir);
  if (grid.height() <= dr || grid.width() <= dc) {
    throw Error(ErrorCode::kInsufficientPairs, std::string("no ") + name_of(dir) + " neighbour pairs");
  }
  const std::size_t rows = grid.height() - dr;
  const std::size_t cols = grid.width() - dc;
  const auto n = static_cast<__int128>(rows * cols);

  // Raw moments in exact integer arithmetic; the centred sums follow as
  // n * sum(xy) - sum(x) * sum(y), so no rounding occurs before the final
  // division.
  __int128 sum_m = 0, sum_n = 0, sum_mm = 0, sum_nn = 0, sum_mn = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const __int128 a = grid.at(r, c);
      const __int128 b = grid.at(r + dr, c + dc);
      sum_m += a;
      sum_n += b;
      sum_mm += a * a;
      sum_nn += b * b;
      sum_mn += a * b;
    }
  }
  const __int128 cov = n * sum_mn - sum_m * sum_n;
  const __int128 var_m = n * sum_mm - sum_m * sum_m;
  const __int128 var_n = n * sum_nn - sum_n * sum_n;
  if (var_m == 0 || var_n == 0) {
    throw Error(ErrorCode::kZeroVariance, std::string(name_of(dir)) + " margin is constant");
  }
  return static_cast<double>(cov) /
         std::sqrt(static_cast<double>(var_m) * static_cast<double>(var_n));
}

Histogram histogram(const PixelGrid& grid) {
  Histogram h{};
  for (const std::uint8_t v : grid.pixels()) ++h[v];
  return h;
}

double entropy(const PixelGrid& grid) {
  const Histogram h = histogram(grid);
  const double total = static_cast<double>(grid.size());
  double bits = 0.0;
  for (const std::uint64_t count : h) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / total;
    bits -= p * std::log2(p);
  }
  // -0.0 for a constant image.
  return bits == 0.0 ? 0.0 : bits;
}

double chi_square(const Histogram& hist) {
  std::uint64_t total = 0;
  for (const auto c : hist) total += c;
  const double expected = static_cast<double>(total) / 256.0;
  double stat = 0.0;
  for (const auto c : hist) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

GlcmMatrix glcm(const PixelGrid& grid) {
  if (grid.width() < 2) {
    throw Error(ErrorCode::kInsufficientPairs, "co-occurrence needs width >= 2");
  }
  GlcmMatrix g;
  for (std::size_t r = 0; r < grid.height(); ++r) {
    const auto row = grid.row(r);
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      ++g.counts[row[c] / 32][row[c + 1] / 32];
    }
  }
  g.pairs = grid.height() * (grid.width() - 1);
  const double total = static_cast<double>(g.pairs);
  for (std::size_t i = 0; i < kGlcmLevels; ++i) {
    for (std::size_t j = 0; j < kGlcmLevels; ++j) {
      g.probabilities[i][j] = static_cast<double>(g.counts[i][j]) / total;
    }
  }
  return g;
}

double homogeneity(const GlcmMatrix& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kGlcmLevels; ++i) {
    for (std::size_t j = 0; j < kGlcmLevels; ++j) {
      const double diff = std::abs(static_cast<double>(i) - static_cast<double>(j));
      sum += g.probabilities[i][j] / (1.0 + diff);
    }
  }
  return sum;
}

double contrast(const GlcmMatrix& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kGlcmLevels; ++i) {
    for (std::size_t j = 0; j < kGlcmLevels; ++j) {
      const double diff = static_cast<double>(i) - static_cast<double>(j);
      sum += diff * diff * g.probabilities[i][j];
    }
  }
  return sum;
}

double energy(const GlcmMatrix& g) {
  double sum = 0.0;
  for (const auto& row : g.probabilities) {
    for (const double p : row) sum += p * p;
  }
  return sum;
}

namespace {

CorrelationResult try_correlation(const PixelGrid& grid, Direction dir) {
  try {
    return {correlation(grid, dir), std::nullopt};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroVariance && e.code() != ErrorCode::kInsufficientPairs) throw;
    return {std::nullopt, e.code()};
  }
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string correlation_json(const CorrelationResult& c) {
  if (c.value) return number(*c.value);
  return "\"" + std::string(to_string(c.condition.value_or(ErrorCode::kZeroVariance))) + "\"";
}

}  // namespace

MetricsReport analyze(const PixelGrid& grid) {
  MetricsReport report;
  report.histogram = histogram(grid);
  report.entropy = entropy(grid);
  report.chi_square = chi_square(report.histogram);
  report.corr_horizontal = try_correlation(grid, Direction::kHorizontal);
  report.corr_vertical = try_correlation(grid, Direction::kVertical);
  report.corr_diagonal = try_correlation(grid, Direction::kDiagonal);
  const GlcmMatrix g = glcm(grid);
  report.contrast = contrast(g);
  report.homogeneity = homogeneity(g);
  report.energy = energy(g);
  return report;
}

std::string to_json(const MetricsReport& r) {
  std::string out = "{";
  out += "\"entropy\":" + number(r.entropy);
  out += ",\"corr_horizontal\":" + correlation_json(r.corr_horizontal);
  out += ",\"corr_vertical\":" + correlation_json(r.corr_vertical);
  out += ",\"corr_diagonal\":" + correlation_json(r.corr_diagonal);
  out += ",\"contrast\":" + number(r.contrast);
  out += ",\"homogeneity\":" + number(r.homogeneity);
  out += ",\"energy\":" + number(r.energy);
  out += ",\"histogram\":[";
  for (std::size_t b = 0; b < r.histogram.size(); ++b) {
    if (b != 0) out += ',';
    out += std::to_string(r.histogram[b]);
  }
  out += "],\"chi_square\":" + number(r.chi_square);
  out += "}\n";
  return out;
}

}  // namespace dnacipher
