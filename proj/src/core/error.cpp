#include "rigidkit/error.hpp"

namespace rigidkit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::AffineSpanTooSmall: return "AffineSpanTooSmall";
    case ErrorCode::NotAHyperplane: return "NotAHyperplane";
    case ErrorCode::BaseNotComplete: return "BaseNotComplete";
    case ErrorCode::PendantAttachedOutsideBase: return "PendantAttachedOutsideBase";
    case ErrorCode::EmptyPendants: return "EmptyPendants";
    case ErrorCode::ContinuumOfRealizations: return "ContinuumOfRealizations";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
  }
  return "Unknown";
}

}  // namespace rigidkit
