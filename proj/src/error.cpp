#include "diophant/error.hpp"

namespace diophant {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotSolvable: return "NotSolvable";
    case ErrorCode::kZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::kRawFormTooLarge: return "RawFormTooLarge";
    case ErrorCode::kFactorizationLimitExceeded: return "FactorizationLimitExceeded";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotInFamily: return "NotInFamily";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace diophant
