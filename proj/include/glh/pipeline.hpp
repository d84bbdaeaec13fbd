#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glh/ansatz.hpp"
#include "glh/config.hpp"
#include "glh/field.hpp"
#include "glh/norms.hpp"
#include "glh/profile.hpp"

namespace glh {

/// Version string written to run manifests.
const char* code_version();

/// Names accepted by run_subcommand, in display order.
const std::vector<std::string>& subcommand_names();

/// Radial profile from the config's parameters, degrees and grid settings.
ProfilePair solve_configured_profile(const RunConfig& cfg);

VortexConfig vortex_config(const RunConfig& cfg, double epsilon);

/// 2D grid of a study. For the k = 2 pair the spacing is snapped so that
/// d~ = (m + 1/2) h, which keeps the vortex centres off the nodes and makes
/// the reflections about x1 = ±d~ map nodes to nodes; the grid spans
/// x1 in ±(2 d~ + margin), x2 in [-grid_below, 1.25 d~ + margin]. Other
/// configurations use a square grid of half width d~ + margin.
Grid2D study_grid(const VortexConfig& vc, const RunConfig& cfg);

NormParams norm_params(const RunConfig& cfg, const VortexConfig& vc);

/// Norms of the error and its splittings at one epsilon.
struct EpsilonStudy {
  double epsilon = 0.0;
  double h = 0.0;
  std::size_t nodes = 0;
  NormReport R;           // ||R||_**
  NormReport R_even;      // ||R_e||_**
  NormReport R_odd;       // ||R_o||_**
  NormReport R_alpha;     // |R_o^alpha|_##
  NormReport R_beta;      // ||R_o^beta||_**
  double split_error = 0.0;  // max |R_o + R_e - R| over valid nodes

  double log_eps() const;
  double R_scaled() const;        // ||R||_** |ln eps|
  double alpha_scaled() const;    // |R_o^alpha|_## / (eps / sqrt|ln eps|)
  double beta_scaled() const;     // ||R_o^beta||_** / (eps sqrt|ln eps|)
};

EpsilonStudy study_epsilon(const ProfilePair& profile, const RunConfig& cfg, double epsilon);

struct RunSummary {
  std::vector<std::string> artifacts;                     // file names relative to the output directory
  std::vector<std::pair<std::string, double>> metrics;   // headline numbers, also in the manifest
  double wall_seconds = 0.0;
};

/// Runs one pipeline and writes its CSV files plus manifest.json into
/// `out_dir` (created if missing). Throws InvalidParams for an unknown name,
/// ValidationFailure when a checked invariant fails (artifacts are written
/// first), and the module errors otherwise.
RunSummary run_subcommand(const std::string& name, const RunConfig& cfg, const std::string& out_dir);

}  // namespace glh
