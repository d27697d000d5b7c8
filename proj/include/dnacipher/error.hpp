#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dnacipher {

enum class ErrorCode {
  kMalformedHeader,
  kUnsupportedMaxval,
  kTruncatedPayload,
  kDimensionMismatch,
  kInvalidKey,
  kDegenerateStream,
  kDrawCountMismatch,
  kTraceLengthMismatch,
  kLengthMismatch,
  kInvalidSymbol,
  kInvalidSBox,
  kZeroVariance,
  kInsufficientPairs,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library. The code says what went wrong;
/// the message says where.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dnacipher
