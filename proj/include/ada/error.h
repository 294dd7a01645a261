#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ada {

// Every failure raised by the library carries one of these codes so callers
// (and the CLI exit-status mapping) can tell failure classes apart without
// parsing messages.
enum class ErrorCode {
  kEmptyInput,
  kRange,
  kTruncatedStream,
  kTrailingData,
  kUnknownSymbol,
  kBadThreshold,
  kMalformedLine,
  kDuplicateSymbol,
  kPrefixViolation,
  kKraftViolation,
  kCountMismatch,
  kInvalidCodeword,
  kValueOutOfRange,
  kBadMagic,
  kUnsupportedVersion,
  kInvalidCounts,
  kDivisionByZero,
  kParseError,
  kInsufficientData,
  kRoundTripMismatch,
  kIo,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ada
