#pragma once

#include <vector>

#include "glh/field.hpp"

namespace glh {

/// k helices g_l(t) = rho e^{it} e^{2 pi i (l-1)/k}, rho = radius_scaled / sqrt|ln eps|,
/// optionally around a straight anti-vortex on the axis (central_degree = -1).
struct FilamentConfig {
  int k = 2;
  double radius_scaled = 1.0;
  double epsilon = 1e-3;
  int central_degree = 0;

  double log_eps() const;
  double rho() const;
};

void validate(const FilamentConfig& c);

/// sum_{j != l} log(2 sin(pi |j - l| / k)), the rho-independent pair constant.
double pair_constant(int k);

/// Energy per period of the rotating polygon:
/// 2 pi² ( |ln eps| k rho² / 2 - k(k-1) log rho - P_k + 2k log rho [central] ).
double interaction_energy(const FilamentConfig& config);

/// Minimizer in rho of interaction_energy (golden section, then Newton on
/// central differences). Throws NoInteriorMinimum when the energy has no
/// interior minimum (k = 1 without a central vortex).
double equilibrium_radius(int k, double epsilon, int central_degree = 0);

/// Second rho-derivative of the energy by central differences.
double energy_second_derivative(const FilamentConfig& config);

struct RelaxOptions {
  double step = 0.02;
  int max_iterations = 200000;
  double gradient_tol = 1e-11;
  int record_every = 100;
};

struct RelaxResult {
  std::vector<std::vector<cplx>> trajectory;  // scaled positions q = g sqrt|ln eps|
  std::vector<cplx> final_positions;
  double gradient_norm = 0.0;
  int iterations = 0;
  double mean_radius_scaled = 0.0;
  double alignment_error = 0.0;  // max |q_l - e^{i phi} p_l| against the rho* polygon after best rotation
};

/// Gradient of the scaled per-period energy
/// F(q) = sum |q_l|²/2 - sum_{j != l} log|q_j - q_l| + 2 sum log|q_l| [central]
/// with respect to each position (as a complex number x + iy).
std::vector<cplx> polygon_gradient(const std::vector<cplx>& q, int central_degree);
double polygon_energy(const std::vector<cplx>& q, int central_degree);

/// Gradient descent from the rho* polygon displaced by `perturbation` (relative
/// to rho*, each coordinate at most 0.1). Throws Divergence on collision.
RelaxResult relax_polygon(int k, double epsilon, int central_degree, const std::vector<cplx>& perturbation,
                          const RelaxOptions& opt = {});

}  // namespace glh
