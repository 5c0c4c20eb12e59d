#include "pumpsim/errors.hpp"

namespace pumpsim {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::NonMonotoneData: return "NonMonotoneData";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::NonphysicalGeometry: return "NonphysicalGeometry";
    case ErrorCode::SolverDivergence: return "SolverDivergence";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::ZeroFlow: return "ZeroFlow";
    case ErrorCode::DegenerateNormalizer: return "DegenerateNormalizer";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::NoDominantPeak: return "NoDominantPeak";
    case ErrorCode::MissingTrace: return "MissingTrace";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace pumpsim
