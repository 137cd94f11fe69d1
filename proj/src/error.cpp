#include "bcf/error.hpp"

namespace bcf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::RootCountNotOne: return "RootCountNotOne";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DegenerateSystem: return "DegenerateSystem";
    case ErrorKind::SingularRFactor: return "SingularRFactor";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero:
    case ErrorKind::DegenerateSystem:
    case ErrorKind::SingularRFactor:
      return false;
    default:
      return true;
  }
}

}  // namespace bcf
