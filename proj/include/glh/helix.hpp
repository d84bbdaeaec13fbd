#pragma once

#include <array>
#include <string>
#include <vector>

#include "glh/energy.hpp"
#include "glh/field.hpp"

namespace glh {

/// Cylindrical probe (r, theta, t).
struct HelixProbe {
  double r = 0.0;
  double theta = 0.0;
  double t = 0.0;
};

/// e^{ikt} u(r, theta - t) for each probe, with u read bilinearly at
/// r e^{i(theta - t)} after reducing t modulo 2 pi. Throws ProbeOutsideGrid.
std::vector<std::array<cplx, 2>> reconstruct_3d(const ComplexField2D& u, int k, const std::vector<HelixProbe>& probes);

struct HelixSample {
  double t = 0.0, x = 0.0, y = 0.0, z = 0.0;
};

struct HelixCurve {
  int branch = 0;  // 0 is the straight central filament, 1..k the helices
  std::vector<HelixSample> samples;
};

/// Filament curves at t_m = 2 pi m / (n - 1), m = 0..n-1: helices of radius
/// config.rho() with phases 2 pi (j-1)/k, plus the axis when central_degree = -1.
std::vector<HelixCurve> filament_curves(const FilamentConfig& config, int n_samples);

/// CSV `branch,t,x,y,z`, branch-major. Throws IoFailure.
void export_curves(const std::vector<HelixCurve>& curves, const std::string& path);
std::vector<HelixCurve> read_curves(const std::string& path);

enum class SliceFrame { CoRotating, Lab };

/// Slice of the 3D field w = e^{ikt} u(r, theta - t) at height t on the nodes of
/// u's grid. Co-rotating rows use coordinates (r, theta - t), so they hold
/// e^{ikt} u(x); lab rows hold e^{ikt} u(rotate(x, -t)).
/// Lab nodes whose preimage falls outside the grid are omitted.
/// CSV `t,x1,x2,re_plus,im_plus,re_minus,im_minus`. Returns the row count.
std::size_t export_slice(const ComplexField2D& u, int k, double t, SliceFrame frame, const std::string& path);

/// File name suffix for a frame: "corot" or "lab".
const char* frame_suffix(SliceFrame f);

}  // namespace glh
