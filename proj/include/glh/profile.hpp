#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "glh/params.hpp"

namespace glh {

/// Strictly increasing radii in (0, L]. `ratio` is the geometric stretching
/// factor when the grid was built by make_geometric_grid (0 otherwise).
struct RadialGrid {
  std::vector<double> nodes;
  double L = 0.0;
  double ratio = 0.0;
};

/// Geometric grid from `first` to exactly `L`; the ratio is adjusted down so
/// that the last node lands on L.
RadialGrid make_geometric_grid(double first, double ratio, double L);

void validate(const RadialGrid& g);

/// Radial value and first two derivatives at one radius.
struct RadialSample {
  double w = 0.0;
  double dw = 0.0;
  double d2w = 0.0;
};

struct ProfilePair {
  RadialGrid grid;
  std::array<std::vector<double>, 2> w;    // W+, W- at nodes
  std::array<std::vector<double>, 2> dw;   // W+', W-'
  std::array<std::vector<double>, 2> d2w;  // W+'', W-''
  GLParams params;
  std::array<int, 2> degree{1, 1};
  std::array<double, 2> tail_c{0.0, 0.0};  // far-field constants used beyond L
  double residual = 0.0;                   // max scaled discrete residual
  int iterations = 0;

  /// C2 evaluation of W(comp) at any radius >= 0: small-radius series below
  /// the first node, quintic Hermite on the grid, tail formula beyond L.
  RadialSample eval(int comp, double ell) const;
  std::size_t size() const { return grid.nodes.size(); }
};

enum class InitialGuess { Rational, Ramp };

struct ProfileOptions {
  int max_iterations = 50;
  InitialGuess guess = InitialGuess::Rational;
};

/// Damped Newton solve of the coupled radial ODE in s = ln(l).
ProfilePair solve_profile(const GLParams& params, std::pair<int, int> degree_pair,
                          const RadialGrid& grid, double tol, const ProfileOptions& opt = {});

/// Far-field constants for a general degree pair (reduces to asymptotic_c for (1,1)).
std::pair<double, double> tail_constants(const GLParams& p, std::pair<int, int> degree_pair);

/// Max over interior nodes of the scaled discrete residual for the stored node
/// values. Rows are the ODE multiplied by min(l², 1): the s-form near the core
/// and the plain radial form for l > 1.
double profile_residual(const ProfilePair& profile);

/// Scaled discrete residual of arbitrary node values on `grid`.
std::vector<double> discrete_residual(const GLParams& params, std::pair<int, int> degree_pair,
                                      const RadialGrid& grid,
                                      const std::array<std::vector<double>, 2>& w);

struct TailFit {
  std::array<double, 2> c_value{};  // from 2 l² (t - W)
  std::array<double, 2> c_deriv{};  // from l³ W'
  std::size_t nodes_used = 0;
};

TailFit tail_fit(const ProfilePair& profile, double lo, double hi);

struct ProfileValidation {
  struct Violation {
    int comp;
    std::size_t index;
  };
  std::vector<Violation> bound_violations;
  std::vector<Violation> monotonicity_violations;
  bool monotonicity_checked = false;
  std::array<double, 2> slope{};            // W/l at the first node
  std::array<double, 2> slope_deviation{};  // relative change of W/l over the first two nodes
  bool ok() const { return bound_violations.empty() && monotonicity_violations.empty(); }
};

ProfileValidation validate_profile(const ProfilePair& profile);

}  // namespace glh
