#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fitz {

enum class ErrorKind {
  NotPrime,
  Overflow,
  SpecMismatch,
  DivisionByZero,
  ReducibleModulus,
  ZeroElement,
  BothZero,
  ZeroConstantTerm,
  NotMonic,
  NotIrreducible,
  NotApplicable,
  NonzeroRemainder,
  CapExceeded,
  OutOfRange,
  SyntaxError,
  CoefficientOutOfField,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure; carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

}  // namespace fitz
