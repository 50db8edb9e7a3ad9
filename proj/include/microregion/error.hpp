#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace microregion {

/// Base for every error the library throws. The CLI maps subclasses of
/// InputError to exit code 1 and anything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with caller-supplied data or arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public InputError {
 public:
  using InputError::InputError;
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyDatasetError : public InputError {
 public:
  using InputError::InputError;
};

/// A statistic or model is undefined for the given data (single row,
/// zero variance, constant target).
class DegenerateError : public InputError {
 public:
  using InputError::InputError;
};

class UndefinedMetricError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

class UndefinedDistanceError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

/// Non-finite values reached a numeric routine.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace microregion
