// Finite-difference kernels for S0 and S1. The *_serial versions are the
// node-by-node reference; the *_parallel versions walk rows with raw pointers
// under OpenMP and must agree with the reference to round-off.

#include <cmath>

#include "glh/errors.hpp"
#include "glh/residual.hpp"

namespace glh {

namespace {

constexpr cplx I(0.0, 1.0);

void check_spacing(const Grid2D& g) {
  validate(g);
  if (g.h() > 0.5) throw Error(ErrorCode::GridTooCoarse, "grid spacing exceeds 0.5");
}

ComplexField2D blank_like(const ComplexField2D& in) {
  ComplexField2D out(in.grid);
  out.valid.assign(in.grid.size(), 0);
  return out;
}

bool stencil_valid(const ComplexField2D& f, std::size_t i, std::size_t j) {
  const Grid2D& g = f.grid;
  if (i == 0 || j == 0 || i + 1 >= g.n1 || j + 1 >= g.n2) return false;
  if (f.valid.empty()) return true;
  for (std::size_t jj = j - 1; jj <= j + 1; ++jj) {
    for (std::size_t ii = i - 1; ii <= i + 1; ++ii) {
      if (!f.valid[g.index(ii, jj)]) return false;
    }
  }
  return true;
}

inline cplx potential_term(const GLParams& p, int c, cplx v, cplx w) {
  const int o = 1 - c;
  return (p.a(c) * (p.t(c) * p.t(c) - std::norm(v)) + p.b * (p.t(o) * p.t(o) - std::norm(w))) * v;
}

}  // namespace

namespace detail {

void s0_serial(const ComplexField2D& in, const GLParams& p, ComplexField2D& out) {
  const Grid2D& g = in.grid;
  const double ih2 = 1.0 / (g.h() * g.h());
  for (std::size_t j = 0; j < g.n2; ++j) {
    for (std::size_t i = 0; i < g.n1; ++i) {
      const std::size_t k = g.index(i, j);
      if (!stencil_valid(in, i, j)) {
        out.plus[k] = out.minus[k] = 0.0;
        out.valid[k] = 0;
        continue;
      }
      for (int c = 0; c < 2; ++c) {
        const auto& f = in.comp(c);
        const cplx lap = (f[g.index(i + 1, j)] + f[g.index(i - 1, j)] + f[g.index(i, j + 1)] +
                          f[g.index(i, j - 1)] - 4.0 * f[k]) * ih2;
        out.comp(c)[k] = lap + potential_term(p, c, f[k], in.comp(1 - c)[k]);
      }
      out.valid[k] = 1;
    }
  }
}

void s0_parallel(const ComplexField2D& in, const GLParams& p, ComplexField2D& out) {
  const Grid2D& g = in.grid;
  const double ih2 = 1.0 / (g.h() * g.h());
  const auto n1 = static_cast<long>(g.n1), n2 = static_cast<long>(g.n2);
  const bool all_valid = in.valid.empty();
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n2; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * g.n1;
    for (long i = 0; i < n1; ++i) {
      const std::size_t k = row + static_cast<std::size_t>(i);
      const bool ok = all_valid ? (i > 0 && j > 0 && i + 1 < n1 && j + 1 < n2)
                                : stencil_valid(in, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!ok) {
        out.plus[k] = out.minus[k] = 0.0;
        out.valid[k] = 0;
        continue;
      }
      const cplx* fp = in.plus.data() + k;
      const cplx* fm = in.minus.data() + k;
      const std::size_t s = g.n1;
      const cplx lp = (fp[1] + fp[-1] + fp[s] + fp[-static_cast<long>(s)] - 4.0 * fp[0]) * ih2;
      const cplx lm = (fm[1] + fm[-1] + fm[s] + fm[-static_cast<long>(s)] - 4.0 * fm[0]) * ih2;
      out.plus[k] = lp + potential_term(p, 0, fp[0], fm[0]);
      out.minus[k] = lm + potential_term(p, 1, fm[0], fp[0]);
      out.valid[k] = 1;
    }
  }
}

void s1_serial(const ComplexField2D& in, double eps, int k_modes, ComplexField2D& out) {
  const Grid2D& g = in.grid;
  const double h = g.h();
  const double kk = static_cast<double>(k_modes);
  for (std::size_t j = 0; j < g.n2; ++j) {
    for (std::size_t i = 0; i < g.n1; ++i) {
      const std::size_t k = g.index(i, j);
      if (!stencil_valid(in, i, j)) {
        out.plus[k] = out.minus[k] = 0.0;
        out.valid[k] = 0;
        continue;
      }
      const double x1 = g.x1(i), x2 = g.x2(j);
      for (int c = 0; c < 2; ++c) {
        const auto& f = in.comp(c);
        auto at = [&](long di, long dj) {
          return f[g.index(static_cast<std::size_t>(static_cast<long>(i) + di),
                           static_cast<std::size_t>(static_cast<long>(j) + dj))];
        };
        const cplx f1 = (at(1, 0) - at(-1, 0)) / (2.0 * h);
        const cplx f2 = (at(0, 1) - at(0, -1)) / (2.0 * h);
        const cplx f11 = (at(1, 0) - 2.0 * at(0, 0) + at(-1, 0)) / (h * h);
        const cplx f22 = (at(0, 1) - 2.0 * at(0, 0) + at(0, -1)) / (h * h);
        const cplx f12 = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
        const cplx ds = x1 * f2 - x2 * f1;
        const cplx dss = x1 * x1 * f22 - 2.0 * x1 * x2 * f12 + x2 * x2 * f11 - x1 * f1 - x2 * f2;
        out.comp(c)[k] = eps * eps * (dss - 2.0 * I * kk * ds - kk * kk * at(0, 0));
      }
      out.valid[k] = 1;
    }
  }
}

void s1_parallel(const ComplexField2D& in, double eps, int k_modes, ComplexField2D& out) {
  const Grid2D& g = in.grid;
  const double h = g.h();
  const double i2h = 1.0 / (2.0 * h), ih2 = 1.0 / (h * h), i4h2 = 1.0 / (4.0 * h * h);
  const double e2 = eps * eps;
  const double kk = static_cast<double>(k_modes);
  const auto n1 = static_cast<long>(g.n1), n2 = static_cast<long>(g.n2);
  const auto s = static_cast<long>(g.n1);
  const bool all_valid = in.valid.empty();
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n2; ++j) {
    const double x2 = g.x2(static_cast<std::size_t>(j));
    for (long i = 0; i < n1; ++i) {
      const std::size_t k = static_cast<std::size_t>(j * s + i);
      const bool ok = all_valid ? (i > 0 && j > 0 && i + 1 < n1 && j + 1 < n2)
                                : stencil_valid(in, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!ok) {
        out.plus[k] = out.minus[k] = 0.0;
        out.valid[k] = 0;
        continue;
      }
      const double x1 = g.x1(static_cast<std::size_t>(i));
      for (int c = 0; c < 2; ++c) {
        const cplx* f = in.comp(c).data() + k;
        const cplx f1 = (f[1] - f[-1]) * i2h;
        const cplx f2 = (f[s] - f[-s]) * i2h;
        const cplx f11 = (f[1] - 2.0 * f[0] + f[-1]) * ih2;
        const cplx f22 = (f[s] - 2.0 * f[0] + f[-s]) * ih2;
        const cplx f12 = (f[s + 1] - f[-s + 1] - f[s - 1] + f[-s - 1]) * i4h2;
        const cplx ds = x1 * f2 - x2 * f1;
        const cplx dss = x1 * x1 * f22 - 2.0 * x1 * x2 * f12 + x2 * x2 * f11 - x1 * f1 - x2 * f2;
        out.comp(c)[k] = e2 * (dss - 2.0 * I * kk * ds - kk * kk * f[0]);
      }
      out.valid[k] = 1;
    }
  }
}

}  // namespace detail

ComplexField2D apply_S0(const ComplexField2D& field, const GLParams& params, Exec exec) {
  check_spacing(field.grid);
  ComplexField2D out = blank_like(field);
  if (exec == Exec::Serial) {
    detail::s0_serial(field, params, out);
  } else {
    detail::s0_parallel(field, params, out);
  }
  return out;
}

ComplexField2D apply_S1(const ComplexField2D& field, const VortexConfig& config, Exec exec) {
  check_spacing(field.grid);
  ComplexField2D out = blank_like(field);
  if (exec == Exec::Serial) {
    detail::s1_serial(field, config.epsilon, config.k, out);
  } else {
    detail::s1_parallel(field, config.epsilon, config.k, out);
  }
  return out;
}

ComplexField2D apply_S(const ComplexField2D& field, const GLParams& params, const VortexConfig& config,
                       Exec exec) {
  ComplexField2D s = apply_S0(field, params, exec);
  {
    const ComplexField2D s1 = apply_S1(field, config, exec);
    const auto n = static_cast<long>(s.grid.size());
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
    for (long k = 0; k < n; ++k) {
      s.plus[k] += s1.plus[k];
      s.minus[k] += s1.minus[k];
      s.valid[k] = static_cast<std::uint8_t>(s.valid[k] && s1.valid[k]);
    }
  }
  return s;
}

}  // namespace glh
