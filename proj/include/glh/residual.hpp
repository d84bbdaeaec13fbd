#pragma once

#include <array>
#include <vector>

#include "glh/ansatz.hpp"
#include "glh/exec.hpp"
#include "glh/field.hpp"
#include "glh/params.hpp"
#include "glh/profile.hpp"

namespace glh {

/// S0(v) = Lap v + [A(t² - |v|²) + B(t'² - |v'|²)] v with a 5-point Laplacian.
/// The boundary ring is marked invalid. Throws GridTooCoarse when h > 0.5.
ComplexField2D apply_S0(const ComplexField2D& field, const GLParams& params, Exec exec = Exec::Parallel);

/// S1(v) = eps² (d_ss - 2ik d_s - k²) v with d_s = x1 d2 - x2 d1 on the Cartesian stencil.
ComplexField2D apply_S1(const ComplexField2D& field, const VortexConfig& config, Exec exec = Exec::Parallel);

ComplexField2D apply_S(const ComplexField2D& field, const GLParams& params, const VortexConfig& config,
                       Exec exec = Exec::Parallel);

/// Exact jets of the two vortex factors of the k = 2 ansatz and the resulting
/// residual pieces at one point, per component.
struct PairResidual {
  std::array<Jet, 2> a;   // factor centred at e1 = +d~
  std::array<Jet, 2> b;   // factor centred at e2 = -d~
  std::array<cplx, 2> v;  // v_d
  std::array<cplx, 2> s0;
  std::array<cplx, 2> s1;
};

/// Closed forms for k = 2:
///   S0 = t^-1 (Lap a b + a Lap b + 2 grad a . grad b) + [A(t² - |v|²) + B(t'² - |v'|²)] v
///   S1 = eps² t^-1 [ d~² (a_22 b + a b_22 - 2 a_2 b_2) + d~ (a_1 b - a b_1) ]
PairResidual pair_residual(const ProfilePair& profile, const VortexConfig& config, cplx z);

std::vector<std::array<cplx, 2>> analytic_S0_on_ansatz(const ProfilePair& profile, const VortexConfig& config,
                                                       const std::vector<cplx>& points);
std::vector<std::array<cplx, 2>> analytic_S1_on_ansatz(const ProfilePair& profile, const VortexConfig& config,
                                                       const std::vector<cplx>& points);

/// S0 with the radial equation substituted for Lap a and Lap b:
///   t^-1 { [A(|a|²-t²)(1-|b|²/t²) + B(|a'|²-t'²)(1-|b'|²/t'²)] a b + 2 grad a . grad b }.
/// Agrees with analytic_S0_on_ansatz up to the profile's own ODE residual.
std::array<cplx, 2> s0_substituted_form(const ProfilePair& profile, const VortexConfig& config, cplx z);

/// Split of S1 near e1 into (d^²/|ln eps|) a_22 b / t, (eps d^/sqrt|ln eps|) a_1 b / t,
/// and the remainder Gamma, each from its own closed form.
struct S1Split {
  std::array<cplx, 2> second_x2;
  std::array<cplx, 2> first_x1;
  std::array<cplx, 2> gamma;
};
S1Split s1_decomposition(const ProfilePair& profile, const VortexConfig& config, cplx z);

/// R = -i S / v_d nodewise; nodes with |v_d±| <= 1e-6 t± or invalid S are masked.
ComplexField2D compute_R(const ComplexField2D& s_field, const ComplexField2D& v_d, const GLParams& params);

/// Re and absolute polar-midpoint integrals of w_{x2x2} conj(w_{x1}) over the
/// disc of `radius` about a single vortex.
struct OrthogonalityIntegral {
  double re_integral = 0.0;
  double abs_integral = 0.0;
};
OrthogonalityIntegral orthogonality_integral(const ProfilePair& profile, int comp, double radius,
                                             int n_theta = 256, double radial_ratio = 1.01);

namespace detail {
// Reference (serial, node-by-node) and OpenMP kernels; exposed for tests and benchmarks.
void s0_serial(const ComplexField2D& in, const GLParams& p, ComplexField2D& out);
void s0_parallel(const ComplexField2D& in, const GLParams& p, ComplexField2D& out);
void s1_serial(const ComplexField2D& in, double eps, int k, ComplexField2D& out);
void s1_parallel(const ComplexField2D& in, double eps, int k, ComplexField2D& out);
}  // namespace detail

}  // namespace glh
