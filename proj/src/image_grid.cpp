#include "dnacipher/image_grid.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

#include "dnacipher/error.hpp"

namespace dnacipher {

PixelGrid::PixelGrid(std::size_t width, std::size_t height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "grid dimensions must be positive");
  }
  if (height > std::numeric_limits<std::size_t>::max() / width || data_.size() != width * height) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(width) + "x" + std::to_string(height) + " grid given " +
                    std::to_string(data_.size()) + " pixels");
  }
}

PixelGrid from_raw(std::size_t width, std::size_t height, std::vector<std::uint8_t> data) {
  return PixelGrid(width, height, std::move(data));
}

namespace {

class HeaderCursor {
 public:
  explicit HeaderCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments up to the next token.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::size_t read_number(const char* what) {
    skip_separators();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw Error(ErrorCode::kMalformedHeader, std::string("expected numeric ") + what);
    }
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      const std::size_t digit = bytes_[pos_] - '0';
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        throw Error(ErrorCode::kMalformedHeader, std::string(what) + " overflows");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void consume_single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(ErrorCode::kMalformedHeader, "missing whitespace before pixel data");
    }
    ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

PixelGrid read_pgm(std::span<const std::uint8_t> bytes, std::vector<std::string>* warnings) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(ErrorCode::kMalformedHeader, "magic is not P5");
  }
  HeaderCursor cursor(bytes.subspan(2));
  if (bytes.size() > 2 && !std::isspace(bytes[2]) && bytes[2] != '#') {
    throw Error(ErrorCode::kMalformedHeader, "magic is not P5");
  }
  const std::size_t width = cursor.read_number("width");
  const std::size_t height = cursor.read_number("height");
  const std::size_t maxval = cursor.read_number("maxval");
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kMalformedHeader, "zero image dimension");
  }
  if (maxval != 255) {
    throw Error(ErrorCode::kUnsupportedMaxval, "maxval " + std::to_string(maxval) + " (only 255)");
  }
  cursor.consume_single_whitespace();

  const std::size_t offset = 2 + cursor.position();
  const std::size_t available = bytes.size() - offset;
  if (height > std::numeric_limits<std::size_t>::max() / width) {
    throw Error(ErrorCode::kMalformedHeader, "dimensions overflow");
  }
  const std::size_t expected = width * height;
  if (available < expected) {
    throw Error(ErrorCode::kTruncatedPayload, "expected " + std::to_string(expected) +
                                                  " pixel bytes, found " + std::to_string(available));
  }
  if (available > expected && warnings != nullptr) {
    warnings->push_back("ignored " + std::to_string(available - expected) +
                        " trailing bytes after pixel data");
  }
  const auto payload = bytes.subspan(offset, expected);
  return PixelGrid(width, height, std::vector<std::uint8_t>(payload.begin(), payload.end()));
}

std::vector<std::uint8_t> write_pgm(const PixelGrid& grid) {
  const std::string header =
      "P5\n" + std::to_string(grid.width()) + " " + std::to_string(grid.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), grid.pixels().begin(), grid.pixels().end());
  return out;
}

PixelGrid load_pgm(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return read_pgm(bytes, warnings);
}

void save_pgm(const std::string& path, const PixelGrid& grid) {
  const auto bytes = write_pgm(grid);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path);
}

}  // namespace dnacipher
