#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed rule expression; `position()` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed rule or config file; `line()` is 1-based.
class FormatError : public Error {
 public:
  FormatError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A network, schedule or labeling violates a structural invariant.
class NetworkError : public Error {
 public:
  using Error::Error;
};

/// Expression evaluated against an assignment that lacks a variable.
class EvaluationError : public Error {
 public:
  explicit EvaluationError(std::string variable)
      : Error("no value for variable '" + variable + "'"), variable_(std::move(variable)) {}

  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

/// A configured size limit (state width, labeling count, plot size) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace boolnet
