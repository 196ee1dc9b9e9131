#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rounding_forge {

enum class ErrorCode {
  kDimensionMismatch,
  kDivisionByZero,
  kDegreeOverflow,
  kNotLinear,
  kNotQuadratic,
  kRankTooLow,
  kNotDivisible,
  kNotDegenerate,
  kIrrationalKernelWitness,
  kDenominatorVanishesIdentically,
  kTooFewPoints,
  kDegenerate,
  kQ2NotQuadratic,
  kPoleProximity,
  kSizeInfeasible,
  kOutOfRange,
  kParse,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every recoverable failure raised by the library.
/// The code is stable and is what the CLI maps to report fields.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rounding_forge
