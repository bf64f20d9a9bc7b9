#pragma once

#include <stdexcept>
#include <string>

namespace nilbreadth {

enum class Errc {
  FieldMismatch,
  DimensionMismatch,
  InvalidField,
  JacobiViolation,
  NotAnIdeal,
  SingularMatrix,
  NotNilpotent,
  EnumerationBudgetExceeded,
  WrongStratum,
  NotAlternating,
  BadParameters,
  SizeCapExceeded,
  UnknownSuite,
  DivisionByZero,
  ParseError,
};

const char* errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map mathematical failures and usage errors to exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nilbreadth
