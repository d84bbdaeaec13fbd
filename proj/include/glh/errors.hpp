#pragma once

#include <stdexcept>
#include <string>

namespace glh {

enum class ErrorCode {
  InvalidParams,
  NonConvergence,
  WindowTooSmall,
  CenterOutsideGrid,
  GridTooCoarse,
  PointAtVortexCenter,
  RegionEmpty,
  CircleOutsideGrid,
  ReflectionOutsideGrid,
  QuadratureUnderresolved,
  NoSignChange,
  NoInteriorMinimum,
  Divergence,
  ProbeOutsideGrid,
  IoFailure,
  ConfigParse,
  ValidationFailure,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), detail_(what) {}
  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace glh
