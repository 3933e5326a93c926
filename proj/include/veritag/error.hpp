#pragma once

#include <stdexcept>
#include <string>

namespace veritag {

/// Failure categories; the CLI maps them to exit codes 1, 2 and 3.
enum class ErrorKind { usage = 1, data = 2, invariant = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Bad input data: malformed files, degenerate label sets, missing paths.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

/// An internal invariant did not hold. Always a bug.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what)
      : Error(ErrorKind::invariant, what) {}
};

inline void check_invariant(bool condition, const char* what) {
  if (!condition) throw InvariantError(what);
}

}  // namespace veritag
