#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyncurve {

enum class ErrorKind {
  ZeroVector,
  DimensionMismatch,
  SyntaxError,
  ParityViolation,
  InconsistentTriangle,
  Unrealizable,
  EndpointMismatch,
  RangeError,
  ParameterError,
  UnsupportedCurve,
  NonprimitiveContent,
  Overflow,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::InconsistentTriangle: return "InconsistentTriangle";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::ParameterError: return "ParameterError";
    case ErrorKind::UnsupportedCurve: return "UnsupportedCurve";
    case ErrorKind::NonprimitiveContent: return "NonprimitiveContent";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit code or a message.
class CurveError : public std::runtime_error {
 public:
  CurveError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the 0-based character offset where it was detected.
class SyntaxError : public CurveError {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : CurveError(ErrorKind::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dyncurve
