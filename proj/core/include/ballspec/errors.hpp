#pragma once

#include <stdexcept>
#include <string>

namespace ballspec {

/// Argument outside the mathematical domain of an operation
/// (non-positive argument, unsupported order, point outside the ball, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Root bracketing failed. Signals an internal inconsistency, never a
/// recoverable input condition.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must share a grid/basis/family do not.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A spectral parameter sits on the spectrum where an operation needs it off.
class ResonanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed input that violates a document schema; `path` names the field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Cached/serialized artifact failed integrity or version checks.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ballspec
