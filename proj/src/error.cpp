#include "mixmult/error.hpp"

namespace mixmult {

ErrorCategory categoryOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::UnknownVariable:
    case ErrorCode::UnknownName:
    case ErrorCode::DuplicateName:
      return ErrorCategory::Parse;
    case ErrorCode::GradeZero:
    case ErrorCode::MissingNonzerodivisor:
    case ErrorCode::NotNonzerodivisor:
    case ErrorCode::IndexDegreeMismatch:
    case ErrorCode::NotPrimaryToMaximal:
    case ErrorCode::ZeroDimensionalRing:
    case ErrorCode::NotIsolated:
    case ErrorCode::NotZeroDimensional:
      return ErrorCategory::Hypothesis;
    case ErrorCode::AssertionFailed:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Validation;
  }
}

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnknownVariable: return "unknown_variable";
    case ErrorCode::UnknownName: return "unknown_name";
    case ErrorCode::DuplicateName: return "duplicate_name";
    case ErrorCode::BadArgument: return "bad_argument";
    case ErrorCode::ExponentOverflow: return "exponent_overflow";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::NegativePower: return "negative_power";
    case ErrorCode::NotHomogeneous: return "not_homogeneous";
    case ErrorCode::DegreeTooLarge: return "degree_too_large";
    case ErrorCode::ZeroDegreeVariable: return "zero_degree_variable";
    case ErrorCode::NotDivisible: return "not_divisible";
    case ErrorCode::NotZeroDimensional: return "not_zero_dimensional";
    case ErrorCode::QuotientUnsupported: return "quotient_unsupported";
    case ErrorCode::GradeZero: return "grade_zero";
    case ErrorCode::MissingNonzerodivisor: return "missing_nonzerodivisor";
    case ErrorCode::NotNonzerodivisor: return "not_nonzerodivisor";
    case ErrorCode::NotAGenerator: return "not_a_generator";
    case ErrorCode::IndexLengthMismatch: return "index_length_mismatch";
    case ErrorCode::IndexDegreeMismatch: return "index_degree_mismatch";
    case ErrorCode::NotPrimaryToMaximal: return "not_primary_to_maximal";
    case ErrorCode::ZeroDimensionalRing: return "zero_dimensional_ring";
    case ErrorCode::NotIsolated: return "not_isolated";
    case ErrorCode::ConstantPolynomial: return "constant_polynomial";
    case ErrorCode::EmptyPolytope: return "empty_polytope";
    case ErrorCode::NegativeCoordinate: return "negative_coordinate";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::CountMismatch: return "count_mismatch";
    case ErrorCode::DimensionUnsupported: return "dimension_unsupported";
    case ErrorCode::AssertionFailed: return "assertion_failed";
    case ErrorCode::UnluckyPrime: return "unlucky_prime";
  }
  return "unknown";
}

}  // namespace mixmult
