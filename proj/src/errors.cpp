#include "gfnf/errors.hpp"

namespace gfnf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoDefaultModulus: return "NoDefaultModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotRref: return "NotRref";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::DimensionGuard: return "DimensionGuard";
    case ErrorKind::NotMonomialOrder: return "NotMonomialOrder";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorKind::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::InvalidPoints: return "InvalidPoints";
    case ErrorKind::ValueCountMismatch: return "ValueCountMismatch";
    case ErrorKind::FieldSpec: return "FieldSpec";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace gfnf
