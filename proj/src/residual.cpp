#include "glh/residual.hpp"

#include <cmath>
#include <numbers>

#include "glh/errors.hpp"

namespace glh {

namespace {

constexpr cplx I(0.0, 1.0);

void require_standard_pair(const VortexConfig& config) {
  validate(config);
  if (config.k != 2 || config.central_antivortex || config.conjugate_minus) {
    throw Error(ErrorCode::InvalidParams, "closed-form residuals are available for the standard k = 2 pair only");
  }
}

cplx grad_dot(const Jet& a, const Jet& b) { return a.d1 * b.d1 + a.d2 * b.d2; }

}  // namespace

PairResidual pair_residual(const ProfilePair& profile, const VortexConfig& config, cplx z) {
  require_standard_pair(config);
  const GLParams& p = profile.params;
  const double dt = config.d_tilde();
  const double e2 = config.epsilon * config.epsilon;
  PairResidual out;
  for (int c = 0; c < 2; ++c) {
    out.a[c] = vortex_jet(profile, c, {dt, 0.0}, 1, z);
    out.b[c] = vortex_jet(profile, c, {-dt, 0.0}, 1, z);
    out.v[c] = out.a[c].v * out.b[c].v / p.t(c);
  }
  for (int c = 0; c < 2; ++c) {
    const int o = 1 - c;
    const Jet& a = out.a[c];
    const Jet& b = out.b[c];
    const double it = 1.0 / p.t(c);
    const double pot = p.a(c) * (p.t(c) * p.t(c) - std::norm(out.v[c])) + p.b * (p.t(o) * p.t(o) - std::norm(out.v[o]));
    out.s0[c] = it * (a.laplacian() * b.v + a.v * b.laplacian() + 2.0 * grad_dot(a, b)) + pot * out.v[c];
    out.s1[c] = e2 * it *
                (dt * dt * (a.d22 * b.v + a.v * b.d22 - 2.0 * a.d2 * b.d2) + dt * (a.d1 * b.v - a.v * b.d1));
  }
  return out;
}

std::vector<std::array<cplx, 2>> analytic_S0_on_ansatz(const ProfilePair& profile, const VortexConfig& config,
                                                       const std::vector<cplx>& points) {
  std::vector<std::array<cplx, 2>> out;
  out.reserve(points.size());
  for (const cplx& z : points) out.push_back(pair_residual(profile, config, z).s0);
  return out;
}

std::vector<std::array<cplx, 2>> analytic_S1_on_ansatz(const ProfilePair& profile, const VortexConfig& config,
                                                       const std::vector<cplx>& points) {
  std::vector<std::array<cplx, 2>> out;
  out.reserve(points.size());
  for (const cplx& z : points) out.push_back(pair_residual(profile, config, z).s1);
  return out;
}

std::array<cplx, 2> s0_substituted_form(const ProfilePair& profile, const VortexConfig& config, cplx z) {
  const PairResidual pr = pair_residual(profile, config, z);
  const GLParams& p = profile.params;
  std::array<cplx, 2> out{};
  for (int c = 0; c < 2; ++c) {
    const int o = 1 - c;
    const double tc2 = p.t(c) * p.t(c), to2 = p.t(o) * p.t(o);
    const double own = p.a(c) * (std::norm(pr.a[c].v) - tc2) * (1.0 - std::norm(pr.b[c].v) / tc2);
    const double cross = p.b * (std::norm(pr.a[o].v) - to2) * (1.0 - std::norm(pr.b[o].v) / to2);
    out[c] = ((own + cross) * pr.a[c].v * pr.b[c].v + 2.0 * grad_dot(pr.a[c], pr.b[c])) / p.t(c);
  }
  return out;
}

S1Split s1_decomposition(const ProfilePair& profile, const VortexConfig& config, cplx z) {
  const PairResidual pr = pair_residual(profile, config, z);
  const double le = config.log_eps();
  const double dh = config.d_hat;
  const double quad = dh * dh / le;                          // eps² d~²
  const double lin = config.epsilon * dh / std::sqrt(le);    // eps² d~
  S1Split out;
  for (int c = 0; c < 2; ++c) {
    const Jet& a = pr.a[c];
    const Jet& b = pr.b[c];
    const double it = 1.0 / profile.params.t(c);
    out.second_x2[c] = quad * it * a.d22 * b.v;
    out.first_x1[c] = lin * it * a.d1 * b.v;
    out.gamma[c] = it * (quad * (a.v * b.d22 - 2.0 * a.d2 * b.d2) - lin * a.v * b.d1);
  }
  return out;
}

ComplexField2D compute_R(const ComplexField2D& s_field, const ComplexField2D& v_d, const GLParams& params) {
  const Grid2D& g = s_field.grid;
  if (g.n1 != v_d.grid.n1 || g.n2 != v_d.grid.n2) {
    throw Error(ErrorCode::InvalidParams, "residual and ansatz grids differ");
  }
  ComplexField2D r(g);
  r.valid.assign(g.size(), 0);
  const double cut_p = 1e-6 * params.t_plus, cut_m = 1e-6 * params.t_minus;
  const auto n = static_cast<long>(g.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    const auto u = static_cast<std::size_t>(k);
    const cplx vp = v_d.plus[u], vm = v_d.minus[u];
    if (!s_field.is_valid(u) || !v_d.is_valid(u) || !(std::abs(vp) > cut_p) || !(std::abs(vm) > cut_m)) continue;
    r.plus[u] = -I * s_field.plus[u] / vp;
    r.minus[u] = -I * s_field.minus[u] / vm;
    r.valid[u] = 1;
  }
  return r;
}

OrthogonalityIntegral orthogonality_integral(const ProfilePair& profile, int comp, double radius, int n_theta,
                                             double radial_ratio) {
  const double r0 = profile.grid.nodes.front();
  const auto cells = static_cast<int>(std::ceil(std::log(radius / r0) / std::log(radial_ratio)));
  const double ds = std::log(radius / r0) / cells;
  const double dth = 2.0 * std::numbers::pi / n_theta;
  double re_sum = 0.0, abs_sum = 0.0;
  for (int m = 0; m < cells; ++m) {
    const double ell = r0 * std::exp(ds * (m + 0.5));
    double ring_re = 0.0, ring_abs = 0.0;
    for (int q = 0; q < n_theta; ++q) {
      const cplx z = std::polar(ell, dth * (q + 0.5));
      const Jet a = vortex_jet(profile, comp, 0.0, 1, z);
      const cplx integrand = a.d22 * std::conj(a.d1);
      ring_re += integrand.real();
      ring_abs += std::abs(integrand);
    }
    const double w = ell * ell * ds * dth;  // l dl dtheta with dl = l ds
    re_sum += ring_re * w;
    abs_sum += ring_abs * w;
  }
  return {re_sum, abs_sum};
}

}  // namespace glh
