#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcf {

enum class ErrorKind {
  // Input errors.
  ParseError,
  Usage,
  DegreeOutOfRange,
  ReduciblePolynomial,
  RootCountNotOne,
  FieldMismatch,
  MixedFields,
  NonPositiveInput,
  IndexOutOfRange,
  InvalidSequence,
  // Computation errors.
  DivisionByZero,
  DegenerateSystem,
  SingularRFactor,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds caused by bad user input rather than a failed computation.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Literal parse failure; `position` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bcf
