#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ado {

enum class ErrorKind {
  DimensionMismatch,
  Singular,
  KernelNotContained,
  NotNilpotent,
  NotAnIdeal,
  ZeroIdeal,
  NotAHomomorphism,
  InvalidGrading,
  BudgetExceeded,
  TensorBudgetExceeded,
  AlgebraMismatch,
  NotACocycle,
  DegenerateCocycle,
  NotCentral,
  NotLinearlyIndependent,
  SeparatorFailed,
  VerificationFailed,
  ReplayMismatch,
  UnknownExample,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ado
