#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exalg {

enum class ErrorCode {
  // field
  MalformedScalar,
  ZeroDenominator,
  NonPrimeModulus,
  DivisionByZero,
  FieldMismatch,
  // shapes
  DimMismatch,
  DimensionTooLarge,
  DualMismatch,
  NotSquare,
  GradeMismatch,
  LengthMismatch,
  WrongGrade,
  WrongDimension,
  TooManyColumns,
  // linear algebra
  SingularMatrix,
  NotComplementary,
  // blades and duality
  NotABlade,
  ZeroInput,
  AlreadyDual,
  NotDual,
  TooFewVectors,
  DependentFactors,
  DependentInput,
  // affine
  ZeroWeight,
  NotProportional,
  ZeroDenominatorVector,
  PreconditionViolated,
  DegenerateLine,
  // projective
  ZeroVector,
  NotAFrame,
  PointInCenter,
  GeneratorExhausted,
  // metric
  NotSymmetric,
  Degenerate,
  BadSign,
  StarNotBlade,
  // text
  MalformedInput,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library. The code identifies the failed
/// precondition; the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail = {});

}  // namespace exalg
