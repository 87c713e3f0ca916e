#pragma once

#include <stdexcept>
#include <string>

namespace ordfuse {

/// Broad failure class. The CLI maps these to process exit codes.
enum class ErrorKind {
  input = 1,     // malformed or inconsistent input data
  numeric = 2,   // degenerate numerics: total conflict, zero denominators
  internal = 3,  // broken internal consistency check
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorKind::numeric, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::internal, what) {}
};

/// Raised by the fusion pipeline; wraps the failing stage's error.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(cause.kind(), stage + ": " + cause.what()),
        stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace ordfuse
