#pragma once

#include <stdexcept>
#include <string>

namespace pumpsim {

enum class ErrorCode {
  InsufficientSamples,
  NonMonotoneData,
  InvalidStep,
  GridTooCoarse,
  InvalidGeometry,
  NonphysicalGeometry,
  SolverDivergence,
  NonFiniteState,
  ZeroFlow,
  DegenerateNormalizer,
  ZeroVariance,
  NoDominantPeak,
  MissingTrace,
  ConfigError,
  IoError,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

// One exception type for the whole library. The code gives callers (and the
// CLI's single-line error output) a stable machine-readable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace pumpsim
