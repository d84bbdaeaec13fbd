#include "glh/params.hpp"

#include <sstream>

#include "glh/errors.hpp"

namespace glh {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::CenterOutsideGrid: return "CenterOutsideGrid";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::PointAtVortexCenter: return "PointAtVortexCenter";
    case ErrorCode::RegionEmpty: return "RegionEmpty";
    case ErrorCode::CircleOutsideGrid: return "CircleOutsideGrid";
    case ErrorCode::ReflectionOutsideGrid: return "ReflectionOutsideGrid";
    case ErrorCode::QuadratureUnderresolved: return "QuadratureUnderresolved";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NoInteriorMinimum: return "NoInteriorMinimum";
    case ErrorCode::Divergence: return "Divergence";
    case ErrorCode::ProbeOutsideGrid: return "ProbeOutsideGrid";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ConfigParse: return "ConfigParse";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
  }
  return "Unknown";
}

void validate(const GLParams& p) {
  std::ostringstream msg;
  if (!(p.a_plus > 0.0) || !(p.a_minus > 0.0)) {
    msg << "a_plus and a_minus must be positive (got " << p.a_plus << ", " << p.a_minus << ")";
  } else if (!(p.b * p.b < p.a_plus * p.a_minus)) {
    msg << "b^2 < a_plus*a_minus violated (b = " << p.b << ")";
  } else if (!(p.t_plus > 0.0) || !(p.t_minus > 0.0)) {
    msg << "t_plus and t_minus must be positive";
  } else if (std::abs(p.t_plus * p.t_plus + p.t_minus * p.t_minus - 1.0) > 1e-12) {
    msg << "t_plus^2 + t_minus^2 must equal 1 (got "
        << p.t_plus * p.t_plus + p.t_minus * p.t_minus << ")";
  } else {
    return;
  }
  throw Error(ErrorCode::InvalidParams, msg.str());
}

std::pair<double, double> asymptotic_c(const GLParams& p) {
  validate(p);
  const double det = p.a_plus * p.a_minus - p.b * p.b;
  return {(p.a_minus - p.b) / (det * p.t_plus), (p.a_plus - p.b) / (det * p.t_minus)};
}

}  // namespace glh
