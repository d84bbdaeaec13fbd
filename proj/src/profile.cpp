#include "glh/profile.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "glh/errors.hpp"

namespace glh {

namespace {

int other(int comp) { return 1 - comp; }

// Finite-difference weights (Fornberg) for derivatives 0..2 at x0 from the
// abscissae x[0..N-1], N <= 6.
struct FdWeights {
  double c[6][3];
};

FdWeights fornberg_weights(double x0, const double* x, int N) {
  constexpr int M = 2;
  FdWeights out{};
  auto& c = out.c;
  double c1 = 1.0, c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < N; ++i) {
    const int mn = std::min(i, M);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return out;
}

// Fourth-order W_ss stencil at interior node i: centred five points, or six
// points shifted inward next to either end.
struct SsStencil {
  std::size_t lo;
  int count;
  double wt[6];
};

SsStencil ss_stencil(const std::vector<double>& s, std::size_t i) {
  const std::size_t n = s.size();
  SsStencil st{};
  if (i == 1) {
    st.lo = 0;
    st.count = 6;
  } else if (i + 2 == n) {
    st.lo = n - 6;
    st.count = 6;
  } else {
    st.lo = i - 2;
    st.count = 5;
  }
  const FdWeights f = fornberg_weights(s[i], &s[st.lo], st.count);
  for (int m = 0; m < st.count; ++m) st.wt[m] = f.c[m][2];
  return st;
}

double potential(const GLParams& p, int comp, double w, double v) {
  const int o = other(comp);
  return p.a(comp) * (w * w - p.t(comp) * p.t(comp)) + p.b * (v * v - p.t(o) * p.t(o));
}

// Leading small-radius coefficient ratio: W ~ a l^n (1 + beta l²).
double series_beta(const GLParams& p, int comp, int n) {
  const int o = other(comp);
  const double lin = p.a(comp) * p.t(comp) * p.t(comp) + p.b * p.t(o) * p.t(o);
  return -lin / (4.0 * n + 4.0);
}

double profile_residual_values(const GLParams& params, std::pair<int, int> degree_pair,
                               const RadialGrid& grid, const std::array<std::vector<double>, 2>& w);

}  // namespace

RadialGrid make_geometric_grid(double first, double ratio, double L) {
  if (!(first > 0.0) || !(ratio > 1.0) || !(L > first)) {
    throw Error(ErrorCode::InvalidParams, "geometric grid needs first > 0, ratio > 1, L > first");
  }
  const double span = std::log(L / first);
  const auto cells = static_cast<std::size_t>(std::ceil(span / std::log(ratio) - 1e-9));
  const double ds = span / static_cast<double>(cells);
  RadialGrid g;
  g.L = L;
  g.ratio = std::exp(ds);
  g.nodes.resize(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) g.nodes[i] = first * std::exp(ds * static_cast<double>(i));
  g.nodes.back() = L;
  validate(g);
  return g;
}

void validate(const RadialGrid& g) {
  if (g.nodes.size() < 8) throw Error(ErrorCode::InvalidParams, "radial grid needs at least 8 nodes");
  if (!(g.nodes.front() > 0.0)) throw Error(ErrorCode::InvalidParams, "first radial node must be > 0");
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    if (!(g.nodes[i] > g.nodes[i - 1])) {
      throw Error(ErrorCode::InvalidParams, "radial nodes must be strictly increasing");
    }
  }
  if (std::abs(g.nodes.back() - g.L) > 1e-12 * g.L) {
    throw Error(ErrorCode::InvalidParams, "last radial node must equal L");
  }
  if (g.L < 30.0) throw Error(ErrorCode::InvalidParams, "radial truncation L must be >= 30");
}

std::pair<double, double> tail_constants(const GLParams& p, std::pair<int, int> degree_pair) {
  validate(p);
  // n+² = A+ t+ c+ + B t- c-,   n-² = A- t- c- + B t+ c+
  const double np2 = static_cast<double>(degree_pair.first) * degree_pair.first;
  const double nm2 = static_cast<double>(degree_pair.second) * degree_pair.second;
  const double m11 = p.a_plus * p.t_plus, m12 = p.b * p.t_minus;
  const double m21 = p.b * p.t_plus, m22 = p.a_minus * p.t_minus;
  const double det = m11 * m22 - m12 * m21;
  return {(np2 * m22 - m12 * nm2) / det, (m11 * nm2 - m21 * np2) / det};
}

std::vector<double> discrete_residual(const GLParams& params, std::pair<int, int> degree_pair,
                                      const RadialGrid& grid,
                                      const std::array<std::vector<double>, 2>& w) {
  const std::size_t n = grid.nodes.size();
  const int deg[2] = {degree_pair.first, degree_pair.second};
  std::vector<double> res(2 * n, 0.0);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::log(grid.nodes[i]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double l = grid.nodes[i];
    const auto st = ss_stencil(s, i);
    for (int c = 0; c < 2; ++c) {
      const double wi = w[c][i];
      double wss = 0.0;
      for (int m = 0; m < st.count; ++m) wss += st.wt[m] * w[c][st.lo + m];
      res[2 * i + c] = (-wss + static_cast<double>(deg[c] * deg[c]) * wi +
                        l * l * potential(params, c, wi, w[other(c)][i]) * wi) /
                       std::max(1.0, l * l);
    }
  }
  return res;
}

ProfilePair solve_profile(const GLParams& params, std::pair<int, int> degree_pair,
                          const RadialGrid& grid, double tol, const ProfileOptions& opt) {
  validate(params);
  validate(grid);
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParams, "tolerance must be positive");
  if (degree_pair.first == 0 || degree_pair.second == 0) {
    throw Error(ErrorCode::InvalidParams, "degrees must be nonzero");
  }

  const std::size_t n = grid.nodes.size();
  const int deg[2] = {std::abs(degree_pair.first), std::abs(degree_pair.second)};
  const auto [cp, cm] = tail_constants(params, degree_pair);
  const double tail_c[2] = {cp, cm};
  const double L = grid.L;
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::log(grid.nodes[i]);

  std::array<std::vector<double>, 2> w{std::vector<double>(n), std::vector<double>(n)};
  for (int c = 0; c < 2; ++c) {
    const double t = params.t(c);
    for (std::size_t i = 0; i < n; ++i) {
      const double l = grid.nodes[i];
      w[c][i] = opt.guess == InitialGuess::Rational ? t * l / std::sqrt(1.0 + l * l)
                                                    : t * std::min(l / 5.0, 1.0);
    }
  }

  // W ~ a l^n (1 + beta l²) links the first two nodes.
  double inner_ratio[2];
  for (int c = 0; c < 2; ++c) {
    const double beta = series_beta(params, c, deg[c]);
    const double l0 = grid.nodes[0], l1 = grid.nodes[1];
    inner_ratio[c] = std::pow(l0 / l1, deg[c]) * (1.0 + beta * l0 * l0) / (1.0 + beta * l1 * l1);
  }
  auto residual = [&](const std::array<std::vector<double>, 2>& x) {
    auto r = discrete_residual(params, degree_pair, grid, x);
    for (int c = 0; c < 2; ++c) {
      r[c] = x[c][0] - inner_ratio[c] * x[c][1];
      r[2 * (n - 1) + c] = x[c][n - 1] - (params.t(c) - tail_c[c] / (2.0 * L * L));
    }
    return r;
  };
  auto sup = [](const std::vector<double>& r) {
    double m = 0.0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
  };

  const auto dim = static_cast<Eigen::Index>(2 * n);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  bool analyzed = false;
  std::vector<double> r = residual(w);
  double rnorm = sup(r);
  int it = 0;
  for (; it < opt.max_iterations && rnorm > tol; ++it) {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(16 * n);
    for (int c = 0; c < 2; ++c) {
      trip.emplace_back(c, c, 1.0);
      trip.emplace_back(c, 2 + c, -inner_ratio[c]);
      const auto last = static_cast<int>(2 * (n - 1) + c);
      trip.emplace_back(last, last, 1.0);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double l = grid.nodes[i];
      const auto st = ss_stencil(s, i);
      const double scale = 1.0 / std::max(1.0, l * l);
      for (int c = 0; c < 2; ++c) {
        const int o = other(c);
        const auto row = static_cast<int>(2 * i + c);
        const double wi = w[c][i], vi = w[o][i];
        for (int m = 0; m < st.count; ++m) {
          if (st.lo + m != i) trip.emplace_back(row, static_cast<int>(2 * (st.lo + m)) + c, -scale * st.wt[m]);
        }
        trip.emplace_back(row, row,
                          scale * (-st.wt[i - st.lo] + deg[c] * deg[c] +
                                   l * l * (params.a(c) * (3.0 * wi * wi - params.t(c) * params.t(c)) +
                                            params.b * (vi * vi - params.t(o) * params.t(o)))));
        trip.emplace_back(row, static_cast<int>(2 * i + o), scale * l * l * 2.0 * params.b * vi * wi);
      }
    }
    Eigen::SparseMatrix<double> J(dim, dim);
    J.setFromTriplets(trip.begin(), trip.end());
    if (!analyzed) {
      lu.analyzePattern(J);
      analyzed = true;
    }
    lu.factorize(J);
    if (lu.info() != Eigen::Success) throw Error(ErrorCode::NonConvergence, "singular Newton Jacobian");
    Eigen::VectorXd rhs(dim);
    for (Eigen::Index k = 0; k < dim; ++k) rhs[k] = -r[static_cast<std::size_t>(k)];
    const Eigen::VectorXd step = lu.solve(rhs);

    double lambda = 1.0;
    std::array<std::vector<double>, 2> trial = w;
    std::vector<double> rt;
    double tnorm = std::numeric_limits<double>::infinity();
    while (lambda >= 1.0 / 1024.0) {
      for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < 2; ++c) trial[c][i] = w[c][i] + lambda * step[static_cast<Eigen::Index>(2 * i + c)];
      }
      rt = residual(trial);
      tnorm = sup(rt);
      if (tnorm < rnorm) break;
      lambda *= 0.5;
    }
    if (!(tnorm < rnorm)) {
      // No decrease even for tiny steps: either converged to round-off or stuck.
      if (rnorm <= 1e3 * tol) break;
      throw Error(ErrorCode::NonConvergence, "damped Newton step failed to reduce the residual");
    }
    w = std::move(trial);
    r = std::move(rt);
    rnorm = tnorm;
  }
  if (rnorm > tol) {
    std::ostringstream msg;
    msg << "residual " << rnorm << " > tol " << tol << " after " << it << " iterations";
    throw Error(ErrorCode::NonConvergence, msg.str());
  }

  ProfilePair out;
  out.grid = grid;
  out.params = params;
  out.degree = {degree_pair.first, degree_pair.second};
  out.tail_c = {tail_c[0], tail_c[1]};
  out.iterations = it;
  out.residual = profile_residual_values(params, degree_pair, grid, w);
  // Derivatives come from five-point differences in s = ln l of the node
  // values themselves, so the Hermite data is consistent with the values at
  // the cell scale.
  for (int c = 0; c < 2; ++c) {
    auto& d1 = out.dw[c];
    auto& d2 = out.d2w[c];
    d1.resize(n);
    d2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t lo = std::min(i >= 2 ? i - 2 : 0, n - 5);
      const FdWeights wt = fornberg_weights(s[i], &s[lo], 5);
      double ws = 0.0, wss = 0.0;
      for (int m = 0; m < 5; ++m) {
        ws += wt.c[m][1] * w[c][lo + m];
        wss += wt.c[m][2] * w[c][lo + m];
      }
      const double l = grid.nodes[i];
      d1[i] = ws / l;
      d2[i] = (wss - ws) / (l * l);
    }
  }
  out.w = std::move(w);
  return out;
}

namespace {
double profile_residual_values(const GLParams& params, std::pair<int, int> degree_pair,
                               const RadialGrid& grid, const std::array<std::vector<double>, 2>& w) {
  const auto r = discrete_residual(params, degree_pair, grid, w);
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}
}  // namespace

double profile_residual(const ProfilePair& profile) {
  return profile_residual_values(profile.params, {profile.degree[0], profile.degree[1]}, profile.grid,
                                 profile.w);
}

RadialSample ProfilePair::eval(int comp, double ell) const {
  const auto& x = grid.nodes;
  const auto& f = w[comp];
  const auto& f1 = dw[comp];
  const auto& f2 = d2w[comp];
  const double t = params.t(comp);
  if (ell >= grid.L) {
    const double c = tail_c[comp];
    const double l2 = ell * ell;
    return {t - c / (2.0 * l2), c / (l2 * ell), -3.0 * c / (l2 * l2)};
  }
  if (ell < x[0]) {
    const int n = std::abs(degree[comp]);
    const double beta = series_beta(params, comp, n);
    const double a = f[0] / (std::pow(x[0], n) * (1.0 + beta * x[0] * x[0]));
    const double ln = std::pow(ell, n);
    const double lnm1 = n >= 1 ? std::pow(ell, n - 1) : 0.0;
    const double lnm2 = n >= 2 ? std::pow(ell, n - 2) : 0.0;
    return {a * ln * (1.0 + beta * ell * ell), a * (n * lnm1 + (n + 2) * beta * ln * ell),
            a * (n * (n - 1) * lnm2 + (n + 2) * (n + 1) * beta * ln)};
  }
  const auto it = std::upper_bound(x.begin(), x.end(), ell);
  const auto i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - x.begin()) - 1));
  const std::size_t j = std::min(i + 1, x.size() - 1);
  const double h = x[j] - x[i];
  const double u = (ell - x[i]) / h;
  const double df = f[j] - f[i];
  const double c0 = f[i];
  const double c1 = h * f1[i];
  const double c2 = 0.5 * h * h * f2[i];
  const double c3 = 10.0 * df - 6.0 * h * f1[i] - 4.0 * h * f1[j] - 1.5 * h * h * f2[i] + 0.5 * h * h * f2[j];
  const double c4 = -15.0 * df + 8.0 * h * f1[i] + 7.0 * h * f1[j] + 1.5 * h * h * f2[i] - h * h * f2[j];
  const double c5 = 6.0 * df - 3.0 * h * f1[i] - 3.0 * h * f1[j] - 0.5 * h * h * f2[i] + 0.5 * h * h * f2[j];
  const double v = c0 + u * (c1 + u * (c2 + u * (c3 + u * (c4 + u * c5))));
  const double dv = c1 + u * (2.0 * c2 + u * (3.0 * c3 + u * (4.0 * c4 + u * 5.0 * c5)));
  const double d2v = 2.0 * c2 + u * (6.0 * c3 + u * (12.0 * c4 + u * 20.0 * c5));
  return {v, dv / h, d2v / (h * h)};
}

TailFit tail_fit(const ProfilePair& profile, double lo, double hi) {
  const double L = profile.grid.L;
  if (!(lo > 0.5 * L) || !(hi <= L) || !(lo < hi)) {
    throw Error(ErrorCode::InvalidParams, "fit window must lie inside (L/2, L]");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double l = profile.grid.nodes[i];
    if (l >= lo && l <= hi) idx.push_back(i);
  }
  if (idx.size() < 8) throw Error(ErrorCode::WindowTooSmall, "fewer than 8 nodes in the fit window");

  // y = c + d / l², fitted by least squares
  auto fit = [&](auto&& sample) {
    double s00 = 0, s01 = 0, s11 = 0, r0 = 0, r1 = 0;
    for (std::size_t i : idx) {
      const double l = profile.grid.nodes[i];
      const double g = 1.0 / (l * l);
      const double y = sample(i, l);
      s00 += 1.0;
      s01 += g;
      s11 += g * g;
      r0 += y;
      r1 += g * y;
    }
    const double det = s00 * s11 - s01 * s01;
    return (r0 * s11 - r1 * s01) / det;
  };

  TailFit out;
  out.nodes_used = idx.size();
  for (int c = 0; c < 2; ++c) {
    const double t = profile.params.t(c);
    out.c_value[c] = fit([&](std::size_t i, double l) { return 2.0 * l * l * (t - profile.w[c][i]); });
    out.c_deriv[c] = fit([&](std::size_t i, double l) { return l * l * l * profile.dw[c][i]; });
  }
  return out;
}

ProfileValidation validate_profile(const ProfilePair& profile) {
  ProfileValidation rep;
  rep.monotonicity_checked = profile.params.negative_coupling();
  const std::size_t n = profile.size();
  for (int c = 0; c < 2; ++c) {
    const double t = profile.params.t(c);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = profile.w[c][i];
      if (!(v > 0.0 && v < t)) rep.bound_violations.push_back({c, i});
      if (rep.monotonicity_checked && !(profile.dw[c][i] > 0.0)) {
        rep.monotonicity_violations.push_back({c, i});
      }
    }
    const double s0 = profile.w[c][0] / profile.grid.nodes[0];
    const double s1 = profile.w[c][1] / profile.grid.nodes[1];
    rep.slope[c] = s0;
    rep.slope_deviation[c] = std::abs(s1 - s0) / std::abs(s0);
  }
  return rep;
}

}  // namespace glh
