#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dnacipher {

/// An M x N matrix of 8-bit intensities stored row-major.
/// Width is the column count, height the row count. Immutable once built.
class PixelGrid {
 public:
  /// Throws Error(kDimensionMismatch) if data.size() != width * height or
  /// either dimension is zero.
  PixelGrid(std::size_t width, std::size_t height, std::vector<std::uint8_t> data);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const { return data_[row * width_ + col]; }
  std::span<const std::uint8_t> row(std::size_t r) const {
    return {data_.data() + r * width_, width_};
  }
  std::span<const std::uint8_t> pixels() const noexcept { return data_; }

  bool operator==(const PixelGrid&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> data_;
};

PixelGrid from_raw(std::size_t width, std::size_t height, std::vector<std::uint8_t> data);

/// Parses a binary P5 stream with maxval 255. Header comments are skipped.
/// Bytes after the declared payload are ignored; if `warnings` is given a
/// note is appended for them.
PixelGrid read_pgm(std::span<const std::uint8_t> bytes,
                   std::vector<std::string>* warnings = nullptr);

std::vector<std::uint8_t> write_pgm(const PixelGrid& grid);

PixelGrid load_pgm(const std::string& path, std::vector<std::string>* warnings = nullptr);
void save_pgm(const std::string& path, const PixelGrid& grid);

}  // namespace dnacipher
