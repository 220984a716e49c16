#pragma once

#include <stdexcept>
#include <string>

namespace liereps {

/// Failure categories; the numeric values double as CLI exit codes.
enum class ErrorKind : int {
  Usage = 1,       // malformed input, bad arguments
  Validation = 2,  // input parsed but violates a mathematical invariant
  Internal = 3,    // a postcondition failed; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::Validation, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, what) {}
};

}  // namespace liereps
