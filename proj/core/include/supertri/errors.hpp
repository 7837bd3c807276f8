#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supertri {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range arguments (dimension mismatch, bad index, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A well-formed document or spec that breaks a structural invariant.
class ValidationError : public InputError {
 public:
  ValidationError(std::string field, const std::string& message)
      : InputError(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Text that could not be parsed; `line` is 1-based, 0 when unknown.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SingularMap : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

/// Operation requested in the wrong regime (Hom vs BiHom).
class ModeError : public Error {
 public:
  using Error::Error;
};

class CommutationError : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A construction's stated hypothesis does not hold on the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace supertri
