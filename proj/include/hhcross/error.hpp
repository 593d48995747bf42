#pragma once

#include <stdexcept>
#include <string>

namespace hhcross {

enum class ErrorKind {
  NotPrime,
  RootUnavailable,
  DivisionByZero,
  OrderMismatch,
  NonDiagonalizable,
  DimensionMismatch,
  NotInSpan,
  ArityMismatch,
  BoundExceeded,
  NotInvertible,
  CharacteristicTooSmall,
  ContextMismatch,
  DegreeInhomogeneous,
  NotSymplectic,
  NotSymplecticOnComplement,
  FactorialNotInvertible,
  IncompleteTable,
  OutOfRange,
  InvalidInput,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::RootUnavailable: return "RootUnavailable";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NonDiagonalizable: return "NonDiagonalizable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DegreeInhomogeneous: return "DegreeInhomogeneous";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotSymplecticOnComplement: return "NotSymplecticOnComplement";
    case ErrorKind::FactorialNotInvertible: return "FactorialNotInvertible";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hhcross
