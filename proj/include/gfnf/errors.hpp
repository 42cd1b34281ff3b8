#ifndef GFNF_ERRORS_HPP
#define GFNF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfnf {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  NoDefaultModulus,
  DivisionByZero,
  ContextMismatch,
  LengthMismatch,
  NoSolution,
  Singular,
  NotRref,
  FrameMismatch,
  DimensionGuard,
  NotMonomialOrder,
  ParseError,
  VariableOutOfRange,
  CoefficientOutOfRange,
  ZeroPolynomial,
  ZeroDivisor,
  InvalidPoints,
  ValueCountMismatch,
  FieldSpec,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for all domain errors; the kind tells callers
/// (and the CLI exit-code mapping) what actually went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gfnf

#endif
