#ifndef CSF_ERRORS_HPP
#define CSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csf {

// Base class for every error this library throws deliberately.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Schema / parse failures (CLI exit code 2).
struct ParseError : Error {
  using Error::Error;
};
struct SchemaError : ParseError {
  using ParseError::ParseError;
};

// Semantic validation failures (CLI exit code 3).
struct ValidationError : Error {
  using Error::Error;
};

struct AllZeroWeights : ValidationError {
  AllZeroWeights() : ValidationError("all weights are zero") {}
};
struct DuplicateObject : ValidationError {
  using ValidationError::ValidationError;
};
struct UnknownObject : ValidationError {
  using ValidationError::ValidationError;
};
struct DanglingReference : ValidationError {
  using ValidationError::ValidationError;
};
struct DuplicateMention : ValidationError {
  using ValidationError::ValidationError;
};
struct PrefixOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};
struct RowSumError : ValidationError {
  using ValidationError::ValidationError;
};
struct KeyMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct EmptyVector : ValidationError {
  EmptyVector() : ValidationError("empty prediction vector") {}
};

}  // namespace csf

#endif
