#ifndef CDLP_ERRORS_HPP_
#define CDLP_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdlp {

// Every failure the library reports carries one of these codes so callers
// (and tests) can branch on the condition rather than the message text.
enum class ErrorCode {
  kInvalidArgument,
  kModulusMismatch,
  kNotPrime,
  kNonInvertible,
  kNoPrime,
  kTooLarge,
  kNoLogarithm,
  kUnknownEncoding,
  kBudgetExceeded,
  kEmptySet,
  kInsufficientElements,
  kSearchTooLarge,
  kUncertifiedSet,
  kInvalidOrder,
  kNoIntersection,
  kAtInfinity,
  kDegenerate,
  kWitnessSearchFailed,
  kPreconditionFailed,
  kSamplingFailed,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cdlp

#endif  // CDLP_ERRORS_HPP_
