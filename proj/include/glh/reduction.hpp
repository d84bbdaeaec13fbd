#pragma once

#include "glh/ansatz.hpp"
#include "glh/profile.hpp"

namespace glh {

/// Polar midpoint rule about e1 over l1 <= r_eps = alpha0 / (eps sqrt|ln eps|):
/// n_theta uniform angles and geometric radial cells of the given ratio from
/// the first profile node.
struct QuadratureSpec {
  int n_theta = 256;
  double radial_ratio = 1.02;
  double alpha0 = 0.5;
};

struct ReductionIntegrals {
  double T0 = 0.0;  // pairing of the S0 part of R with the x1 translation of the e1 vortex
  double T1 = 0.0;  // same for the S1 part
  double r_eps = 0.0;
  std::size_t nodes = 0;
};

/// T_i = sum over components of Re int conj(a_x1) t S_i / b, which equals
/// Re int i conj(w_x1) w R_i with w = a the vortex at e1, b the vortex at e2 and
/// R_i = -i S_i / v_d. S_i are the closed forms of pair_residual. k = 2 only.
/// Throws QuadratureUnderresolved when n_theta < 64.
ReductionIntegrals reduction_integrals(const ProfilePair& profile, const VortexConfig& config,
                                       const QuadratureSpec& quad = {});

struct DhatResult {
  double d_hat = 0.0;
  double T0 = 0.0;
  double T1 = 0.0;
  int iterations = 0;
};

/// Bisection root of d^ -> T0 + T1 on [lo, hi] to `tol`. Throws NoSignChange.
DhatResult solve_dhat(const ProfilePair& profile, double epsilon, const QuadratureSpec& quad = {}, double lo = 0.3,
                      double hi = 3.0, double tol = 1e-4);

}  // namespace glh
