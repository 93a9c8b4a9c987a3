#ifndef FIBERBOUND_ERRORS_HPP
#define FIBERBOUND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fiberbound {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or scheme file. Line and column are 1-based;
/// line is 0 when the text did not come from a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string pos = line ? std::to_string(line) + ":" + std::to_string(column)
                           : "column " + std::to_string(column);
    return pos + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different polynomial rings") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  NotZeroDimensional() : Error("ideal is not zero-dimensional") {}
};

class ImproperIdeal : public Error {
 public:
  ImproperIdeal() : Error("ideal is the unit ideal") {}
};

class NotASubmodule : public Error {
 public:
  NotASubmodule() : Error("subspace is not stable under the module action") {}
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

}  // namespace fiberbound

#endif  // FIBERBOUND_ERRORS_HPP
