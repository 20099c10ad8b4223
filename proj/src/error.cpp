#include "ifsir/error.hpp"

namespace ifsir {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidIfn: return "InvalidIfn";
    case ErrorKind::NonPositiveScalar: return "NonPositiveScalar";
    case ErrorKind::DegenerateReference: return "DegenerateReference";
    case ErrorKind::UnknownTerm: return "UnknownTerm";
    case ErrorKind::DuplicateTerm: return "DuplicateTerm";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::InvalidThresholdParams: return "InvalidThresholdParams";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string path)
    : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

}  // namespace ifsir
