#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "glh/ansatz.hpp"
#include "glh/profile.hpp"
#include "glh/residual.hpp"

namespace support {

inline glh::ProfilePair solve(const glh::GLParams& p, std::pair<int, int> deg = {1, 1}) {
  return glh::solve_profile(p, deg, glh::make_geometric_grid(1e-3, 1.0025, 60.0), 1e-10);
}

/// Default coupled profile (A = 1, B = -0.3, t = 1/sqrt 2), solved once per binary.
inline const glh::ProfilePair& default_profile() {
  static const glh::ProfilePair p = solve(glh::GLParams{});
  return p;
}

/// Far-field constants from balancing the 1/l² terms of W = t - c/(2 l²):
///   A+ t+ c+ + B t- c- = 1,  B t+ c+ + A- t- c- = 1.
inline std::array<double, 2> far_field_c(const glh::GLParams& p) {
  const double m00 = p.a_plus * p.t_plus, m01 = p.b * p.t_minus;
  const double m10 = p.b * p.t_plus, m11 = p.a_minus * p.t_minus;
  const double det = m00 * m11 - m01 * m10;
  return {(m11 - m01) / det, (m00 - m10) / det};
}

/// Worst |apply_S - (analytic S0 + analytic S1)| over 50 probes on the k = 2
/// ansatz at eps = 0.1. Probes are multiples of 0.2 in both coordinates so
/// that every spacing in `hs` (all divisors of 0.2) sees the same points, and
/// stay 2 away from both vortices.
inline std::vector<double> fd_vs_analytic(const glh::ProfilePair& pr, const std::vector<double>& hs) {
  glh::VortexConfig cf;
  cf.epsilon = 0.1;
  cf.k = 2;
  cf.d_hat = 1.0;
  const double dt = cf.d_tilde();
  std::vector<glh::cplx> probes;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ui(-100, 100);
  while (probes.size() < 50) {
    const glh::cplx z(ui(rng) * 0.2, ui(rng) * 0.2);
    if (std::abs(z - dt) <= 2.0 || std::abs(z + dt) <= 2.0) continue;
    probes.push_back(z);
  }
  const auto a0 = glh::analytic_S0_on_ansatz(pr, cf, probes);
  const auto a1 = glh::analytic_S1_on_ansatz(pr, cf, probes);
  std::vector<double> out;
  for (double h : hs) {
    const glh::Grid2D g = glh::square_grid(dt + 16.0, h);
    const glh::ComplexField2D s = glh::apply_S(glh::build_ansatz(pr, cf, g), pr.params, cf);
    double worst = 0.0;
    for (std::size_t q = 0; q < probes.size(); ++q) {
      const auto idx = g.node_at(probes[q], 1e-6);
      if (!idx) throw std::runtime_error("probe is not a grid node");
      for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(s.comp(c)[*idx] - a0[q][c] - a1[q][c]));
    }
    out.push_back(worst);
  }
  return out;
}

}  // namespace support
