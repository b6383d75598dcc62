#pragma once

#include <stdexcept>
#include <string>

namespace rado {

enum class ErrorCode {
  // mesh construction
  DegenerateTriangle,
  NonManifoldEdge,
  PinchedVertex,
  EmptyBoundary,
  // scalar fields
  LengthMismatch,
  NonFiniteValue,
  NonGenericInteriorEdge,
  TieRejected,
  // classification
  RelaxedBoundaryAtVertex,
  MissingPositions,
  DegenerateGeometry,
  // level networks
  RelaxedBoundaryAtLevel,
  // regions
  NonRegularClipValue,
  NonManifoldQuotient,
  // verifiers
  HasBoundary,
  NoBoundary,
  NonRegularRegionBoundary,
  // generators
  ResolutionTooCoarse,
  // io
  IoFailure,
  ParseFailure,
  BadArgument,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
  case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
  case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
  case ErrorCode::PinchedVertex: return "PinchedVertex";
  case ErrorCode::EmptyBoundary: return "EmptyBoundary";
  case ErrorCode::LengthMismatch: return "LengthMismatch";
  case ErrorCode::NonFiniteValue: return "NonFiniteValue";
  case ErrorCode::NonGenericInteriorEdge: return "NonGenericInteriorEdge";
  case ErrorCode::TieRejected: return "TieRejected";
  case ErrorCode::RelaxedBoundaryAtVertex: return "RelaxedBoundaryAtVertex";
  case ErrorCode::MissingPositions: return "MissingPositions";
  case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
  case ErrorCode::RelaxedBoundaryAtLevel: return "RelaxedBoundaryAtLevel";
  case ErrorCode::NonRegularClipValue: return "NonRegularClipValue";
  case ErrorCode::NonManifoldQuotient: return "NonManifoldQuotient";
  case ErrorCode::HasBoundary: return "HasBoundary";
  case ErrorCode::NoBoundary: return "NoBoundary";
  case ErrorCode::NonRegularRegionBoundary: return "NonRegularRegionBoundary";
  case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
  case ErrorCode::IoFailure: return "IoFailure";
  case ErrorCode::ParseFailure: return "ParseFailure";
  case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace rado
