#pragma once

#include <stdexcept>
#include <string>

namespace ckasym {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  IoError,
  NonFiniteInput,
  DimensionMismatch,
  RowCountMismatch,
  CenteringMismatch,
  AlreadyCentered,
  EmptyInput,
  DegenerateRepresentation,
  ZeroSelfSimilarity,
  ZeroLinearCka,
  InsufficientTail,
};

// Process exit codes: 0 success, 1 usage, 2 data, 3 numerical degeneracy.
enum class ErrorCategory { Usage = 1, Data = 2, Degeneracy = 3 };

constexpr ErrorCategory category(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return ErrorCategory::Usage;
    case ErrorCode::DegenerateRepresentation:
    case ErrorCode::ZeroSelfSimilarity:
    case ErrorCode::ZeroLinearCka:
    case ErrorCode::InsufficientTail:
      return ErrorCategory::Degeneracy;
    default:
      return ErrorCategory::Data;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(category(code_)); }

 private:
  ErrorCode code_;
};

}  // namespace ckasym
