#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kummerlab {

enum class ErrorKind {
  kValidation,
  kBudgetExceeded,
  kMissingLevels,
  kMissingLogValue,
  kInternal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The kind drives the CLI
/// exit code and the machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::kValidation, message) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message)
      : Error(ErrorKind::kBudgetExceeded, message) {}
};

/// A residue system does not carry enough p-power levels to certify that
/// no further carries occur for prime p.
class MissingLevels : public Error {
 public:
  explicit MissingLevels(std::uint64_t p);

  std::uint64_t prime() const noexcept { return p_; }

 private:
  std::uint64_t p_;
};

class MissingLogValue : public Error {
 public:
  MissingLogValue()
      : Error(ErrorKind::kMissingLogValue,
              "residue system has no log_value; log n is required") {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::kInternal, message) {}
};

}  // namespace kummerlab
