#pragma once

#include <stdexcept>
#include <string>

namespace mixmult {

/// Broad failure classes. The CLI maps each one to a process exit code.
enum class ErrorCategory {
  Parse,       ///< malformed session text or flags
  Validation,  ///< well-formed input that violates an operation's contract
  Hypothesis,  ///< a mathematical precondition fails (grade, primality, dimension)
  Internal,    ///< an invariant the library itself should have maintained
};

/// Machine-readable error identifiers; `errorCodeName` gives the wire spelling.
enum class ErrorCode {
  Syntax,
  UnknownVariable,
  UnknownName,
  DuplicateName,
  BadArgument,
  ExponentOverflow,
  ZeroPolynomial,
  RingMismatch,
  NegativePower,
  NotHomogeneous,
  DegreeTooLarge,
  ZeroDegreeVariable,
  NotDivisible,
  NotZeroDimensional,
  QuotientUnsupported,
  GradeZero,
  MissingNonzerodivisor,
  NotNonzerodivisor,
  NotAGenerator,
  IndexLengthMismatch,
  IndexDegreeMismatch,
  NotPrimaryToMaximal,
  ZeroDimensionalRing,
  NotIsolated,
  ConstantPolynomial,
  EmptyPolytope,
  NegativeCoordinate,
  DimensionMismatch,
  CountMismatch,
  DimensionUnsupported,
  AssertionFailed,
  UnluckyPrime,
};

ErrorCategory categoryOf(ErrorCode code);
const char* errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return categoryOf(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mixmult
