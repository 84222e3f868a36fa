#include "indexsum/error.hpp"

namespace indexsum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoPrimitiveModulus: return "NoPrimitiveModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::BadSubfield: return "BadSubfield";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::BranchMismatch: return "BranchMismatch";
    case ErrorCode::BadExponents: return "BadExponents";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::BadCheckSet: return "BadCheckSet";
    case ErrorCode::ZeroCodeword: return "ZeroCodeword";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace indexsum
