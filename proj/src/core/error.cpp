#include "error.hpp"

namespace powerclose {

std::string_view errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyGenerators: return "EmptyGenerators";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNegativeExponent: return "NegativeExponent";
    case ErrorCode::kZeroMultiIndex: return "ZeroMultiIndex";
    case ErrorCode::kNotMPrimary: return "NotMPrimary";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kWrongTotalDegree: return "WrongTotalDegree";
    case ErrorCode::kValidityGate: return "ValidityGate";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kValidationFailure: return "ValidationFailure";
    case ErrorCode::kNotContained: return "NotContained";
    case ErrorCode::kNoneFound: return "NoneFound";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace powerclose
