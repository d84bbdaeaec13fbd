#include "glh/reduction.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "glh/errors.hpp"
#include "glh/residual.hpp"

namespace glh {

ReductionIntegrals reduction_integrals(const ProfilePair& profile, const VortexConfig& config,
                                       const QuadratureSpec& quad) {
  validate(config);
  if (config.k != 2 || config.central_antivortex || config.conjugate_minus) {
    throw Error(ErrorCode::InvalidParams, "reduction integrals are defined for the standard k = 2 pair");
  }
  if (quad.n_theta < 64) throw Error(ErrorCode::QuadratureUnderresolved, "fewer than 64 angular points");
  if (!(quad.radial_ratio > 1.0) || !(quad.alpha0 > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "radial ratio must exceed 1 and alpha0 must be positive");
  }
  const GLParams& p = profile.params;
  const double r_eps = quad.alpha0 / (config.epsilon * std::sqrt(config.log_eps()));
  const double r0 = profile.grid.nodes.front();
  if (!(r_eps > r0)) throw Error(ErrorCode::InvalidParams, "cut radius below the first profile node");
  const int cells = static_cast<int>(std::ceil(std::log(r_eps / r0) / std::log(quad.radial_ratio)));
  const double ds = std::log(r_eps / r0) / cells;
  const double dth = 2.0 * std::numbers::pi / quad.n_theta;
  const cplx e1(config.d_tilde(), 0.0);

  // Per-angle partial sums, combined serially so the result does not depend
  // on the thread count.
  std::vector<double> p0(static_cast<std::size_t>(quad.n_theta)), p1(p0.size());
#pragma omp parallel for schedule(static)
  for (int q = 0; q < quad.n_theta; ++q) {
    const cplx dir = std::polar(1.0, dth * (q + 0.5));
    double s0 = 0.0, s1 = 0.0;
    for (int m = 0; m < cells; ++m) {
      const double ell = r0 * std::exp(ds * (m + 0.5));
      const PairResidual pr = pair_residual(profile, config, e1 + ell * dir);
      const double w = ell * ell * ds * dth;
      for (int c = 0; c < 2; ++c) {
        const cplx f = std::conj(pr.a[c].d1) * p.t(c) / pr.b[c].v;
        s0 += (f * pr.s0[c]).real() * w;
        s1 += (f * pr.s1[c]).real() * w;
      }
    }
    p0[static_cast<std::size_t>(q)] = s0;
    p1[static_cast<std::size_t>(q)] = s1;
  }
  double t0 = 0.0, t1 = 0.0;
  for (std::size_t q = 0; q < p0.size(); ++q) {
    t0 += p0[q];
    t1 += p1[q];
  }
  return {t0, t1, r_eps, static_cast<std::size_t>(cells) * static_cast<std::size_t>(quad.n_theta)};
}

DhatResult solve_dhat(const ProfilePair& profile, double epsilon, const QuadratureSpec& quad, double lo, double hi,
                      double tol) {
  if (!(lo > 0.0 && hi > lo) || !(tol > 0.0)) throw Error(ErrorCode::InvalidParams, "invalid bracket or tolerance");
  auto eval = [&](double d_hat) {
    VortexConfig c;
    c.epsilon = epsilon;
    c.k = 2;
    c.d_hat = d_hat;
    return reduction_integrals(profile, c, quad);
  };
  ReductionIntegrals flo = eval(lo), fhi = eval(hi);
  double glo = flo.T0 + flo.T1, ghi = fhi.T0 + fhi.T1;
  if (glo == 0.0) return {lo, flo.T0, flo.T1, 0};
  if (ghi == 0.0) return {hi, fhi.T0, fhi.T1, 0};
  if ((glo > 0.0) == (ghi > 0.0)) throw Error(ErrorCode::NoSignChange, "T0 + T1 has no sign change on the bracket");
  int it = 0;
  ReductionIntegrals fm{};
  double mid = 0.5 * (lo + hi);
  while (hi - lo > tol) {
    mid = 0.5 * (lo + hi);
    fm = eval(mid);
    const double g = fm.T0 + fm.T1;
    ++it;
    if (g == 0.0) break;
    if ((g > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = g;
    } else {
      hi = mid;
    }
  }
  mid = 0.5 * (lo + hi);
  fm = eval(mid);
  return {mid, fm.T0, fm.T1, it};
}

}  // namespace glh
