#include "glh/kernel.hpp"

#include <cmath>
#include <random>

#include "glh/ansatz.hpp"
#include "glh/errors.hpp"

namespace glh {

ComplexField2D sample_field(const Grid2D& grid, const PointField& f, Exec exec) {
  ComplexField2D out(grid);
  const auto n2 = static_cast<long>(grid.n2);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
  for (long j = 0; j < n2; ++j) {
    for (std::size_t i = 0; i < grid.n1; ++i) {
      const auto k = grid.index(i, static_cast<std::size_t>(j));
      const auto v = f(grid.z(i, static_cast<std::size_t>(j)));
      out.plus[k] = v[0];
      out.minus[k] = v[1];
    }
  }
  return out;
}

std::array<cplx, 2> TranslationMode::operator()(cplx z) const {
  const double ell = std::abs(z);
  std::array<cplx, 2> out{};
  for (int c = 0; c < 2; ++c) {
    if (ell < profile_->grid.nodes.front()) {
      // w ~ a z near the origin, so d/dx1 -> a and d/dx2 -> i a.
      const double slope = profile_->eval(c, ell).dw;
      out[c] = dir_ == 1 ? cplx(slope, 0.0) : cplx(0.0, slope);
      continue;
    }
    const Jet j = vortex_jet(*profile_, c, 0.0, 1, z);
    out[c] = dir_ == 1 ? j.d1 : j.d2;
  }
  return out;
}

PointField random_smooth_field(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  struct Bump {
    cplx center;
    double width;
    std::array<cplx, 2> amp;
  };
  std::vector<Bump> bumps;
  for (int m = 0; m < 6; ++m) {
    Bump b;
    b.center = {4.0 * u(rng), 4.0 * u(rng)};
    b.width = 1.5 + u(rng);
    b.amp = {cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
    bumps.push_back(b);
  }
  const std::array<cplx, 2> base{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
  return [bumps, base](cplx z) {
    std::array<cplx, 2> v = base;
    for (const auto& b : bumps) {
      const double g = std::exp(-std::norm(z - b.center) / (b.width * b.width));
      v[0] += b.amp[0] * g;
      v[1] += b.amp[1] * g;
    }
    const double decay = 1.0 / std::sqrt(1.0 + std::norm(z));
    return std::array<cplx, 2>{v[0] * decay, v[1] * decay};
  };
}

namespace {

struct BaseState {
  std::array<cplx, 2> w;
  std::array<double, 2> pot;
};

BaseState base_state(const ProfilePair& profile, cplx y) {
  const GLParams& p = profile.params;
  BaseState s;
  double W[2];
  const double ell = std::abs(y);
  for (int c = 0; c < 2; ++c) {
    W[c] = profile.eval(c, ell).w;
    s.w[c] = ell > 0.0 ? W[c] * (y / ell) : 0.0;
  }
  for (int c = 0; c < 2; ++c) {
    const int o = 1 - c;
    s.pot[c] = p.a(c) * (p.t(c) * p.t(c) - W[c] * W[c]) + p.b * (p.t(o) * p.t(o) - W[o] * W[o]);
  }
  return s;
}

inline cplx l0_point(const GLParams& p, int c, const BaseState& s, cplx lap, cplx phi_c, cplx phi_o) {
  const int o = 1 - c;
  const double proj_c = (s.w[c] * std::conj(phi_c)).real();
  const double proj_o = (s.w[o] * std::conj(phi_o)).real();
  return lap + s.pot[c] * phi_c - 2.0 * p.a(c) * proj_c * s.w[c] - 2.0 * p.b * proj_o * s.w[c];
}

}  // namespace

namespace detail {

void l0_serial(const ComplexField2D& phi, const ProfilePair& profile, cplx center, ComplexField2D& out) {
  const Grid2D& g = phi.grid;
  const double ih2 = 1.0 / (g.h() * g.h());
  for (std::size_t j = 0; j < g.n2; ++j) {
    for (std::size_t i = 0; i < g.n1; ++i) {
      const std::size_t k = g.index(i, j);
      if (i == 0 || j == 0 || i + 1 == g.n1 || j + 1 == g.n2) {
        out.plus[k] = out.minus[k] = 0.0;
        out.valid[k] = 0;
        continue;
      }
      const BaseState s = base_state(profile, g.z(i, j) - center);
      for (int c = 0; c < 2; ++c) {
        const auto& f = phi.comp(c);
        const cplx lap =
            (f[g.index(i + 1, j)] + f[g.index(i - 1, j)] + f[g.index(i, j + 1)] + f[g.index(i, j - 1)] - 4.0 * f[k]) *
            ih2;
        out.comp(c)[k] = l0_point(profile.params, c, s, lap, f[k], phi.comp(1 - c)[k]);
      }
      out.valid[k] = 1;
    }
  }
}

void l0_parallel(const ComplexField2D& phi, const ProfilePair& profile, cplx center, ComplexField2D& out) {
  const Grid2D& g = phi.grid;
  const double ih2 = 1.0 / (g.h() * g.h());
  const auto n1 = static_cast<long>(g.n1), n2 = static_cast<long>(g.n2);
  const long s = n1;
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n2; ++j) {
    const double x2 = g.x2(static_cast<std::size_t>(j));
    for (long i = 0; i < n1; ++i) {
      const std::size_t k = static_cast<std::size_t>(j * s + i);
      if (i == 0 || j == 0 || i + 1 == n1 || j + 1 == n2) {
        out.plus[k] = out.minus[k] = 0.0;
        out.valid[k] = 0;
        continue;
      }
      const BaseState st = base_state(profile, cplx(g.x1(static_cast<std::size_t>(i)), x2) - center);
      const cplx* fp = phi.plus.data() + k;
      const cplx* fm = phi.minus.data() + k;
      const cplx lp = (fp[1] + fp[-1] + fp[s] + fp[-s] - 4.0 * fp[0]) * ih2;
      const cplx lm = (fm[1] + fm[-1] + fm[s] + fm[-s] - 4.0 * fm[0]) * ih2;
      out.plus[k] = l0_point(profile.params, 0, st, lp, fp[0], fm[0]);
      out.minus[k] = l0_point(profile.params, 1, st, lm, fm[0], fp[0]);
      out.valid[k] = 1;
    }
  }
}

}  // namespace detail

ComplexField2D apply_L0(const ComplexField2D& phi, const ProfilePair& profile, cplx center, Exec exec) {
  validate(phi.grid);
  if (phi.grid.h() > 0.5) throw Error(ErrorCode::GridTooCoarse, "grid spacing exceeds 0.5");
  ComplexField2D out(phi.grid);
  out.valid.assign(phi.grid.size(), 0);
  if (exec == Exec::Serial) {
    detail::l0_serial(phi, profile, center, out);
  } else {
    detail::l0_parallel(phi, profile, center, out);
  }
  return out;
}

double fitted_order(const std::vector<double>& hs, const std::vector<double>& values) {
  const auto n = static_cast<double>(hs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double x = std::log(hs[i]), y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

KernelResidualReport kernel_residual(const ProfilePair& profile, const std::vector<double>& hs,
                                     const PointField& phi, double half_width) {
  KernelResidualReport rep;
  std::vector<double> sups;
  for (double h : hs) {
    const Grid2D g = square_grid(half_width, h);
    const ComplexField2D f = sample_field(g, phi);
    const ComplexField2D r = apply_L0(f, profile);
    KernelResidualRow row;
    row.h = h;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!r.is_valid(k)) continue;
      row.sup_plus = std::max(row.sup_plus, std::abs(r.plus[k]));
      row.sup_minus = std::max(row.sup_minus, std::abs(r.minus[k]));
    }
    rep.rows.push_back(row);
    sups.push_back(row.sup());
  }
  if (hs.size() >= 2) rep.order = fitted_order(hs, sups);
  return rep;
}

KernelResidualReport kernel_residual(const ProfilePair& profile, const std::vector<double>& hs, double half_width) {
  const TranslationMode mode(profile, 1);
  return kernel_residual(profile, hs, [mode](cplx z) { return mode(z); }, half_width);
}

}  // namespace glh
