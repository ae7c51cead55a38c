#include "exalg/error.hpp"

namespace exalg {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedScalar: return "MalformedScalar";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DualMismatch: return "DualMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::GradeMismatch: return "GradeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::WrongGrade: return "WrongGrade";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::TooManyColumns: return "TooManyColumns";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::NotABlade: return "NotABlade";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::AlreadyDual: return "AlreadyDual";
    case ErrorCode::NotDual: return "NotDual";
    case ErrorCode::TooFewVectors: return "TooFewVectors";
    case ErrorCode::DependentFactors: return "DependentFactors";
    case ErrorCode::DependentInput: return "DependentInput";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::ZeroDenominatorVector: return "ZeroDenominatorVector";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::PointInCenter: return "PointInCenter";
    case ErrorCode::GeneratorExhausted: return "GeneratorExhausted";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::StarNotBlade: return "StarNotBlade";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail) {
  std::string msg(error_name(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(format_message(code, detail)), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace exalg
