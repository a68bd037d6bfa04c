#include "cdlp/errors.hpp"

namespace cdlp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNonInvertible: return "NonInvertible";
    case ErrorCode::kNoPrime: return "NoPrime";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoLogarithm: return "NoLogarithm";
    case ErrorCode::kUnknownEncoding: return "UnknownEncoding";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kInsufficientElements: return "InsufficientElements";
    case ErrorCode::kSearchTooLarge: return "SearchTooLarge";
    case ErrorCode::kUncertifiedSet: return "UncertifiedSet";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kNoIntersection: return "NoIntersection";
    case ErrorCode::kAtInfinity: return "AtInfinity";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kWitnessSearchFailed: return "WitnessSearchFailed";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kSamplingFailed: return "SamplingFailed";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
      code_(code) {}

}  // namespace cdlp
