#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nid {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values built over different universes were combined.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch() : Error("subset and rule system are over different universes") {}
  explicit UniverseMismatch(const std::string& what) : Error(what) {}
};

/// An exhaustive operation was asked to work on a universe beyond the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t size, std::size_t cap, const std::string& what)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A semantic precondition of an operation does not hold (e.g. lfp on a
/// non-deterministic system, a ring table that is not distributive).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A family handed to a generation check contains a set that is not closed.
class NotClosed : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

/// Malformed input data: unknown names, duplicate names, wrong shapes.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A path in a path set violates the fiber condition of its signature.
class MalformedPath : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Syntax error in the textual formula grammar.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InvalidInput(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nid
