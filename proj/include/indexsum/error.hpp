#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace indexsum {

enum class ErrorCode {
  NotPrime,
  Reducible,
  TooLarge,
  NoPrimitiveModulus,
  DivisionByZero,
  ZeroArgument,
  BadSubfield,
  NotDivisor,
  PrimeMismatch,
  ConstantPolynomial,
  BranchMismatch,
  BadExponents,
  NonIntegerResult,
  NonDivisible,
  BadCheckSet,
  ZeroCodeword,
  ShapeMismatch,
  ConfigError,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module. The code identifies the failed
/// precondition; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace indexsum
