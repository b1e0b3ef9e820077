#include "mspin/error.hpp"

namespace mspin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::ClosedSurface: return "ClosedSurface";
    case ErrorCode::SumConstraintViolated: return "SumConstraintViolated";
    case ErrorCode::ClosedSurfaceInadmissible: return "ClosedSurfaceInadmissible";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MismatchedSignature: return "MismatchedSignature";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::EllipticUnsupported: return "EllipticUnsupported";
    case ErrorCode::ChartBoundary: return "ChartBoundary";
    case ErrorCode::PathThroughDegeneracy: return "PathThroughDegeneracy";
    case ErrorCode::NotCovered: return "NotCovered";
    case ErrorCode::SharedFixedPoint: return "SharedFixedPoint";
    case ErrorCode::DegenerateElement: return "DegenerateElement";
    case ErrorCode::OutOfValidityRegion: return "OutOfValidityRegion";
    case ErrorCode::OrientationSearchFailed: return "OrientationSearchFailed";
    case ErrorCode::RelatorNotIdentity: return "RelatorNotIdentity";
    case ErrorCode::WindingNotIntegral: return "WindingNotIntegral";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mspin
