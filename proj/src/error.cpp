#include "dnacipher/error.hpp"

namespace dnacipher {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kUnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidKey: return "InvalidKey";
    case ErrorCode::kDegenerateStream: return "DegenerateStream";
    case ErrorCode::kDrawCountMismatch: return "DrawCountMismatch";
    case ErrorCode::kTraceLengthMismatch: return "TraceLengthMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInvalidSymbol: return "InvalidSymbol";
    case ErrorCode::kInvalidSBox: return "InvalidSBox";
    case ErrorCode::kZeroVariance: return "ZeroVariance";
    case ErrorCode::kInsufficientPairs: return "InsufficientPairs";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace dnacipher
