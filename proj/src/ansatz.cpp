#include "glh/ansatz.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "glh/errors.hpp"

namespace glh {

double VortexConfig::log_eps() const { return std::abs(std::log(epsilon)); }

double VortexConfig::d_tilde() const { return d_hat / (epsilon * std::sqrt(log_eps())); }

std::vector<cplx> VortexConfig::centers() const {
  std::vector<cplx> out;
  const double dt = d_tilde();
  for (int j = 0; j < k; ++j) {
    cplx e = std::polar(dt, 2.0 * std::numbers::pi * j / k);
    // Keep centres on the axes exactly (e.g. -d~ for k = 2) so that reflections stay on grid lines.
    if (std::abs(e.real()) < 1e-14 * dt) e.real(0.0);
    if (std::abs(e.imag()) < 1e-14 * dt) e.imag(0.0);
    out.push_back(e);
  }
  return out;
}

void validate(const VortexConfig& c) {
  if (!(c.epsilon > 0.0 && c.epsilon < 0.2)) throw Error(ErrorCode::InvalidParams, "epsilon must lie in (0, 0.2)");
  if (c.k < 1) throw Error(ErrorCode::InvalidParams, "k must be >= 1");
  if (!(c.d_hat > 0.0)) throw Error(ErrorCode::InvalidParams, "d_hat must be positive");
  if (c.central_antivortex && c.k < 4) {
    throw Error(ErrorCode::InvalidParams, "central anti-vortex requires k >= 4");
  }
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v * b.v;
  r.d1 = a.d1 * b.v + a.v * b.d1;
  r.d2 = a.d2 * b.v + a.v * b.d2;
  r.d11 = a.d11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d11;
  r.d22 = a.d22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.d22;
  r.d12 = a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12;
  return r;
}

Jet operator*(cplx s, const Jet& a) {
  return {s * a.v, s * a.d1, s * a.d2, s * a.d11, s * a.d12, s * a.d22};
}

namespace {

// exp(i sigma theta) from the offset y without trigonometry.
cplx phase(cplx y, double ell, int sigma) {
  const cplx u = y / ell;
  return sigma > 0 ? u : std::conj(u);
}

}  // namespace

cplx vortex_value(const ProfilePair& profile, int comp, cplx center, int sigma, cplx z) {
  const cplx y = z - center;
  const double ell = std::abs(y);
  if (ell == 0.0) return 0.0;
  return profile.eval(comp, ell).w * phase(y, ell, sigma);
}

Jet vortex_jet(const ProfilePair& profile, int comp, cplx center, int sigma, cplx z) {
  const cplx y = z - center;
  const double ell = std::abs(y);
  if (!(ell >= profile.grid.nodes.front())) {
    throw Error(ErrorCode::PointAtVortexCenter, "jet requested inside the first profile node");
  }
  const RadialSample r = profile.eval(comp, ell);
  const double c = y.real() / ell, s = y.imag() / ell;
  const cplx p = phase(y, ell, sigma);
  const cplx is(0.0, static_cast<double>(sigma));
  const double q = r.dw / ell - r.w / (ell * ell);  // W'/l - W/l²
  Jet j;
  j.v = p * r.w;
  j.d1 = p * (r.dw * c - is * (r.w * s / ell));
  j.d2 = p * (r.dw * s + is * (r.w * c / ell));
  j.d11 = p * (r.d2w * c * c + q * s * s - 2.0 * is * (c * s * q));
  j.d22 = p * (r.d2w * s * s + q * c * c + 2.0 * is * (c * s * q));
  j.d12 = p * ((r.d2w - q) * c * s + is * ((c * c - s * s) * q));
  return j;
}

AnsatzEvaluator::AnsatzEvaluator(const ProfilePair& profile, const VortexConfig& config)
    : profile_(&profile), config_(config), centers_(config.centers()) {
  validate(config);
  const int power = config.central_antivortex ? -config.k : 1 - config.k;
  for (int c = 0; c < 2; ++c) prefactor_[c] = std::pow(profile.params.t(c), power);
}

cplx AnsatzEvaluator::value(int comp, cplx z) const {
  const int sg = sigma(comp);
  cplx v = prefactor_[comp];
  for (const cplx& e : centers_) v *= vortex_value(*profile_, comp, e, sg, z);
  if (config_.central_antivortex) v *= vortex_value(*profile_, comp, 0.0, -sg, z);
  return v;
}

Jet AnsatzEvaluator::jet(int comp, cplx z) const {
  const int sg = sigma(comp);
  Jet acc;
  acc.v = prefactor_[comp];
  for (const cplx& e : centers_) acc = acc * vortex_jet(*profile_, comp, e, sg, z);
  if (config_.central_antivortex) acc = acc * vortex_jet(*profile_, comp, 0.0, -sg, z);
  return acc;
}

ComplexField2D build_ansatz(const ProfilePair& profile, const VortexConfig& config, const Grid2D& grid,
                            Exec exec) {
  validate(grid);
  const AnsatzEvaluator ev(profile, config);
  for (const cplx& e : ev.centers()) {
    const double h = grid.h();
    const bool interior = e.real() > grid.x1_min + h && e.real() < grid.x1_max - h &&
                          e.imag() > grid.x2_min + h && e.imag() < grid.x2_max - h;
    if (!interior) {
      std::cerr << "warning: " << error_name(ErrorCode::CenterOutsideGrid) << ": vortex center " << e
                << " is not interior to the grid\n";
    }
  }
  ComplexField2D f(grid);
  const auto n1 = static_cast<long>(grid.n1), n2 = static_cast<long>(grid.n2);
  if (exec == Exec::Serial) {
    for (long j = 0; j < n2; ++j) {
      for (long i = 0; i < n1; ++i) {
        const auto k = grid.index(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        const cplx z = grid.z(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        f.plus[k] = ev.value(0, z);
        f.minus[k] = ev.value(1, z);
      }
    }
  } else {
#pragma omp parallel for schedule(static)
    for (long j = 0; j < n2; ++j) {
      const double x2 = grid.x2(static_cast<std::size_t>(j));
      cplx* rp = f.plus.data() + static_cast<std::size_t>(j) * grid.n1;
      cplx* rm = f.minus.data() + static_cast<std::size_t>(j) * grid.n1;
      for (long i = 0; i < n1; ++i) {
        const cplx z(grid.x1(static_cast<std::size_t>(i)), x2);
        rp[i] = ev.value(0, z);
        rm[i] = ev.value(1, z);
      }
    }
  }
  return f;
}

double modulus_limit_check(const ComplexField2D& field) {
  const Grid2D& g = field.grid;
  double worst = 0.0;
  auto visit = [&](std::size_t i, std::size_t j) {
    const auto k = g.index(i, j);
    worst = std::max(worst, std::abs(std::norm(field.plus[k]) + std::norm(field.minus[k]) - 1.0));
  };
  for (std::size_t i = 0; i < g.n1; ++i) {
    visit(i, 0);
    visit(i, g.n2 - 1);
  }
  for (std::size_t j = 0; j < g.n2; ++j) {
    visit(0, j);
    visit(g.n1 - 1, j);
  }
  return worst;
}

double winding_number(const ComplexField2D& field, int comp, cplx center, double radius, int samples) {
  double total = 0.0;
  cplx prev{};
  for (int m = 0; m <= samples; ++m) {
    const cplx z = center + std::polar(radius, 2.0 * std::numbers::pi * m / samples);
    const auto v = field.interpolate(comp, z);
    if (!v) throw Error(ErrorCode::CircleOutsideGrid, "winding circle leaves the grid");
    if (m > 0) total += std::arg(*v / prev);
    prev = *v;
  }
  return total / (2.0 * std::numbers::pi);
}

std::vector<cplx> small_modulus_nodes(const ComplexField2D& field, int comp, double threshold) {
  std::vector<cplx> out;
  const auto& f = field.comp(comp);
  for (std::size_t j = 0; j < field.grid.n2; ++j) {
    for (std::size_t i = 0; i < field.grid.n1; ++i) {
      if (std::abs(f[field.grid.index(i, j)]) < threshold) out.push_back(field.grid.z(i, j));
    }
  }
  return out;
}

}  // namespace glh
