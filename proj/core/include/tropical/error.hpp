#pragma once

#include <stdexcept>
#include <string>

namespace tropical {

/// Machine-readable failure class, surfaced by the CLI as an error category.
enum class ErrorCategory {
  parse_error,
  validation_error,
  dimension_mismatch,
  precondition_failed,
  internal_error,
};

std::string to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCategory::parse_error, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCategory::validation_error, what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorCategory::dimension_mismatch, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCategory::precondition_failed, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCategory::internal_error, what) {}
};

}  // namespace tropical
