#include "ada/error.h"

namespace ada {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kRange: return "RangeError";
    case ErrorCode::kTruncatedStream: return "TruncatedStream";
    case ErrorCode::kTrailingData: return "TrailingData";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kBadThreshold: return "BadThreshold";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kDuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::kPrefixViolation: return "PrefixViolation";
    case ErrorCode::kKraftViolation: return "KraftViolation";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kInvalidCodeword: return "InvalidCodeword";
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kRoundTripMismatch: return "RoundTripMismatch";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace ada
