#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ifsir {

enum class ErrorKind {
  InvalidIfn,
  NonPositiveScalar,
  DegenerateReference,
  UnknownTerm,
  DuplicateTerm,
  ParseError,
  LengthMismatch,
  EmptyInput,
  InvalidWeights,
  InvalidThresholdParams,
  DimensionMismatch,
  InvalidProblem,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type. `path` is a JSON
// pointer into the input document when the error came from parsing,
// otherwise empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string path = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorKind kind_;
  std::string path_;
};

}  // namespace ifsir
