#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinclass {

enum class ErrorKind {
  MalformedSyntax,
  AlignmentViolation,
  EmptyInput,
  NonAlternatingCycle,
  IndexOutOfRange,
  NotAPermutation,
  NoOrigin,
  MultipleOrigins,
  EmptyPermutation,
  NonIndecomposableElement,
  NotInterior,
  DivisionByZero,
  NonzeroConstantTerm,
  PoleAtZero,
  StabilizationFailure,
  BoundViolation,
  NotRecurrent,
  DisconnectedQuadrants,
  NoRootInRange,
  ConvergenceNotReached,
  CensusTooLarge,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every library failure is reported as a PinError carrying its kind, so
/// callers (notably the CLI) can map kinds to exit codes without parsing text.
class PinError : public std::runtime_error {
 public:
  PinError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSyntax: return "MalformedSyntax";
    case ErrorKind::AlignmentViolation: return "AlignmentViolation";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonAlternatingCycle: return "NonAlternatingCycle";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NoOrigin: return "NoOrigin";
    case ErrorKind::MultipleOrigins: return "MultipleOrigins";
    case ErrorKind::EmptyPermutation: return "EmptyPermutation";
    case ErrorKind::NonIndecomposableElement: return "NonIndecomposableElement";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::StabilizationFailure: return "StabilizationFailure";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::NotRecurrent: return "NotRecurrent";
    case ErrorKind::DisconnectedQuadrants: return "DisconnectedQuadrants";
    case ErrorKind::NoRootInRange: return "NoRootInRange";
    case ErrorKind::ConvergenceNotReached: return "ConvergenceNotReached";
    case ErrorKind::CensusTooLarge: return "CensusTooLarge";
  }
  return "Unknown";
}

}  // namespace pinclass
