#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gbkit {

enum class Errc {
  ModulusMismatch,
  DivisionByZero,
  InvalidModulus,
  CompositeModulus,
  ArityMismatch,
  RingMismatch,
  ExponentOverflow,
  ZeroPolynomial,
  ZeroDivisorPolynomial,
  DuplicatePolynomial,
  EmptyInput,
  NoPivot,
  NotZeroDimensional,
  UnitIdeal,
  NotReduced,
  NotAGroebnerBasis,
  ModulusTooLarge,
  ParseError,
  UnknownVariable,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library. The code is stable and is what callers
// (and the CLI exit status mapping) switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gbkit
