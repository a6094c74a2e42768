#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgk {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element or operation that does not belong to the structure it was used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that does not satisfy its precondition
/// (e.g. a quotient by a subgroup that is not normal).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input that cannot form the requested structure at all.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation refused to run because the input is too large.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t size, std::size_t bound)
      : Error(what + " (size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound) + ")"),
        size_(size),
        bound_(bound) {}

  std::size_t size() const { return size_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

/// A constructed object failed a check that the construction should guarantee.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace mgk
