#include "gbkit/error.hpp"

namespace gbkit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroDivisorPolynomial: return "ZeroDivisorPolynomial";
    case Errc::DuplicatePolynomial: return "DuplicatePolynomial";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NoPivot: return "NoPivot";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::UnitIdeal: return "UnitIdeal";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NotAGroebnerBasis: return "NotAGroebnerBasis";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

}  // namespace gbkit
