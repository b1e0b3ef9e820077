#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mspin {

enum class ErrorCode {
  InvalidModulus,
  InvalidSignature,
  ClosedSurface,
  SumConstraintViolated,
  ClosedSurfaceInadmissible,
  LengthMismatch,
  IndexOutOfRange,
  MismatchedSignature,
  StateSpaceTooLarge,
  DegenerateParameters,
  Degenerate,
  EllipticUnsupported,
  ChartBoundary,
  PathThroughDegeneracy,
  NotCovered,
  SharedFixedPoint,
  DegenerateElement,
  OutOfValidityRegion,
  OrientationSearchFailed,
  RelatorNotIdentity,
  WindingNotIntegral,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure of the library surfaces as this exception; `code()` lets
// callers (and the CLI's exit-code mapping) branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mspin
