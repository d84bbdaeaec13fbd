#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glh/params.hpp"

namespace glh {

/// Every tunable of the command-line pipelines. Defaults are the values used
/// by the acceptance runs.
struct RunConfig {
  GLParams params;
  int degree_plus = 1;
  int degree_minus = 1;

  // radial profile
  double profile_first = 1e-3;
  double profile_ratio = 1.0025;
  double profile_L = 60.0;
  double profile_tol = 1e-10;
  int profile_max_iterations = 50;
  double tail_fit_lo = 35.0;
  double tail_fit_hi = 60.0;

  // vortex configuration and sweep
  std::vector<double> epsilons{1e-2, 3e-3, 1e-3};
  int k = 2;
  double d_hat = 1.0;
  bool central = false;

  // 2D grids: spacing target (snapped so that d~ = (m + 1/2) h), margin beyond
  // the vortices, and extent below the x1 axis.
  double grid_h = 0.25;
  double grid_margin = 20.0;
  double grid_below = 15.0;
  double window_half_width = 12.0;

  // norms
  double alpha = 0.3;
  double sigma = 0.5;
  double alpha0 = 0.5;
  double region_factor = 2.0;
  int holder_centers = 256;
  int holder_pairs = 256;

  // angular modes
  int fourier_K = 8;
  std::vector<double> fourier_radii{3.0, 5.0, 8.0, 12.0};

  // linearized kernel
  std::vector<double> kernel_h{0.2, 0.1, 0.05};
  double kernel_half_width = 20.0;

  // reduction
  int quad_theta = 256;
  double quad_ratio = 1.02;
  std::vector<double> quad_alpha0{0.5, 0.25};
  double dhat_lo = 0.3;
  double dhat_hi = 3.0;
  double dhat_tol = 1e-4;
  std::vector<double> energy_k{2, 3, 4, 5};

  // helix export
  int helix_samples = 64;
  double helix_epsilon = 0.1;
  std::vector<double> slice_t{0.0, 0.7853981633974483};
  double slice_h = 0.25;
  double slice_margin = 8.0;

  std::uint64_t seed = 1;
};

/// Parses `key = value` lines; `#` starts a comment; lists are comma
/// separated. Unknown keys and malformed values throw ConfigParse naming the
/// line and key.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& source = "<text>");
RunConfig load_config(const std::string& path);

/// Sets one key from its textual value (same rules as the file format).
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// All keys with their current values, formatted as they would be written in a file.
std::map<std::string, std::string> config_values(const RunConfig& cfg);

}  // namespace glh
