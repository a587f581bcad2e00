#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace longmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class OutOfInterval : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class MixedQuandle : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NoSchedule : public Error {
 public:
  using Error::Error;
};

class ResidualTooLarge : public Error {
 public:
  using Error::Error;
};

class NotInLambda : public Error {
 public:
  using Error::Error;
};

class NegativeDiscriminant : public Error {
 public:
  using Error::Error;
};

class NotMinusOne : public Error {
 public:
  using Error::Error;
};

/// Syntax error in tangle text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace longmap
