#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace origami {

enum class ErrorCode {
  InvalidArgument,
  ZeroPolynomial,
  EndpointIsRoot,
  DivisionByZero,
  NegativeRadicand,
  HintNotIsolating,
  CoincidentPoints,
  ParallelLines,
  IdenticalLines,
  DegenerateFold,
  AmbiguousFold,
  MalformedCertificate,
  SyntaxError,
  UnknownName,
  DuplicateName,
  SelectorOutOfRange,
  AssertionFailed,
  TypeMismatch,
  NoTowerStep,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::HintNotIsolating: return "HintNotIsolating";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::IdenticalLines: return "IdenticalLines";
    case ErrorCode::DegenerateFold: return "DegenerateFold";
    case ErrorCode::AmbiguousFold: return "AmbiguousFold";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::SelectorOutOfRange: return "SelectorOutOfRange";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NoTowerStep: return "NoTowerStep";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace origami
