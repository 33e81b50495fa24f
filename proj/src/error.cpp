#include "ado/error.hpp"

namespace ado {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::KernelNotContained: return "KernelNotContained";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::InvalidGrading: return "InvalidGrading";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TensorBudgetExceeded: return "TensorBudgetExceeded";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::DegenerateCocycle: return "DegenerateCocycle";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotLinearlyIndependent: return "NotLinearlyIndependent";
    case ErrorKind::SeparatorFailed: return "SeparatorFailed";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ReplayMismatch: return "ReplayMismatch";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ado
