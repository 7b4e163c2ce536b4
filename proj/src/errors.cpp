#include "fitz/errors.hpp"

namespace fitz {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::CoefficientOutOfField: return "CoefficientOutOfField";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

ParseError::ParseError(const std::string& msg, std::size_t position)
    : Error(ErrorKind::SyntaxError,
            msg + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace fitz
