#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

enum class ErrorCode {
  kMalformedDocument,
  kDanglingReference,
  kSelfPaired,
  kInvalidSurface,
  kDisconnected,
  kUnsupportedStratum,
  kOddStratum,
  kInvalidCycle,
  kDegenerateForm,
  kLengthMismatch,
  kDegenerateSeed,
  kInvalidArgument,
  kLatticePole,
  kNoConvergence,
  kPathError,
  kIo,
};

// Stable snake_case identifier, used verbatim in CLI error documents.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strata
