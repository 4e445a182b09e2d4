#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace powerclose {

/// Error categories raised by the core. The numeric values are mirrored by
/// pc_status in the C API, so keep the two lists in sync.
enum class ErrorCode : int {
  kEmptyGenerators = 1,
  kDimensionMismatch = 2,
  kNegativeExponent = 3,
  kZeroMultiIndex = 4,
  kNotMPrimary = 5,
  kOverflow = 6,
  kWrongTotalDegree = 7,
  kValidityGate = 8,
  kSingularSystem = 9,
  kValidationFailure = 10,
  kNotContained = 11,
  kNoneFound = 12,
  kSearchExhausted = 13,
  kParseError = 14,
  kValidationError = 15,
  kInvalidArgument = 16,
  kIoError = 17,
  kInternal = 18,
};

std::string_view errorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace powerclose
