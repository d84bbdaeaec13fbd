#include "glh/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "glh/errors.hpp"

namespace glh {

namespace {

constexpr cplx I(0.0, 1.0);

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

const char* comp_name(int c) { return c == 0 ? "plus" : "minus"; }

bool usable(const ComplexField2D& H, const ComplexField2D& v_d, std::size_t k) {
  return H.is_valid(k) && v_d.is_valid(k);
}

constexpr std::size_t kMaxCenters = 16;

struct Distances {
  std::size_t n = 0;
  double ell[kMaxCenters]{};
  double min = 0.0;
  double sum_pow(double p) const {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::pow(ell[j], p);
    return s;
  }
};

Distances distances(cplx z, const std::vector<cplx>& centers) {
  Distances d;
  d.n = std::min(centers.size(), kMaxCenters);
  d.min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < d.n; ++j) {
    d.ell[j] = std::abs(z - centers[j]);
    d.min = std::min(d.min, d.ell[j]);
  }
  return d;
}

std::vector<cplx> norm_centers(const VortexConfig& config) {
  auto c = config.centers();
  if (c.size() > kMaxCenters) throw Error(ErrorCode::InvalidParams, "norms support at most 16 vortices");
  return c;
}

/// Node nearest to z, when z lies inside the grid.
std::optional<std::size_t> nearest_node(const Grid2D& g, cplx z) {
  const double h = g.h();
  const double fi = std::round((z.real() - g.x1_min) / h);
  const double fj = std::round((z.imag() - g.x2_min) / h);
  if (fi < 0 || fj < 0 || fi > static_cast<double>(g.n1 - 1) || fj > static_cast<double>(g.n2 - 1)) {
    return std::nullopt;
  }
  return g.index(static_cast<std::size_t>(fi), static_cast<std::size_t>(fj));
}

cplx node_z(const Grid2D& g, std::size_t k) { return g.z(k % g.n1, k / g.n1); }

/// Sampled Hölder quotient max |f(x) - f(y)| / |x - y|^alpha over node pairs
/// inside the disc B_r(c). Partners are drawn at log-uniform distances in
/// [h, 2r] so both the cell scale and the ball scale are probed.
template <class F, class Ok>
double holder_in_disc(const Grid2D& g, cplx c, double r, double alpha, int pairs, std::mt19937_64& rng, F&& f,
                      Ok&& ok) {
  const double h = g.h();
  if (r < h) return 0.0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  double best = 0.0;
  const int max_draws = 8 * pairs;
  int done = 0;
  for (int draw = 0; draw < max_draws && done < pairs; ++draw) {
    const cplx zx = c + std::polar(r * std::sqrt(unit(rng)), two_pi * unit(rng));
    const auto kx = nearest_node(g, zx);
    if (!kx) continue;
    const cplx x = node_z(g, *kx);
    if (std::abs(x - c) >= r || !ok(*kx)) continue;
    const double dist = h * std::exp(unit(rng) * std::log(2.0 * r / h));
    const auto ky = nearest_node(g, x + std::polar(dist, two_pi * unit(rng)));
    if (!ky || *ky == *kx) continue;
    const cplx y = node_z(g, *ky);
    if (std::abs(y - c) >= r || !ok(*ky)) continue;
    ++done;
    best = std::max(best, std::abs(f(*kx) - f(*ky)) / std::pow(std::abs(x - y), alpha));
  }
  return best;
}

std::uint64_t piece_seed(std::uint64_t seed, int tag, int comp, int j) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(tag * 131 + comp * 17 + j);
}

/// Sup of |v_d H| on {l_j < radius} plus its sampled Hölder quotient; one
/// pair of pieces per centre and component.
void core_pieces(const ComplexField2D& H, const ComplexField2D& v_d, const std::vector<cplx>& centers,
                 double radius, const NormParams& np, int core_pairs, NormReport& rep) {
  const Grid2D& g = H.grid;
  const double h = g.h();
  const std::string region = "l_j<" + fmt(radius);
  for (int c = 0; c < 2; ++c) {
    const auto& hc = H.comp(c);
    const auto& vc = v_d.comp(c);
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const cplx e = centers[j];
      double sup = 0.0;
      const long i0 = std::max<long>(0, static_cast<long>(std::floor((e.real() - radius - g.x1_min) / h)));
      const long i1 = std::min<long>(static_cast<long>(g.n1) - 1,
                                     static_cast<long>(std::ceil((e.real() + radius - g.x1_min) / h)));
      const long j0 = std::max<long>(0, static_cast<long>(std::floor((e.imag() - radius - g.x2_min) / h)));
      const long j1 = std::min<long>(static_cast<long>(g.n2) - 1,
                                     static_cast<long>(std::ceil((e.imag() + radius - g.x2_min) / h)));
      for (long jj = j0; jj <= j1; ++jj) {
        for (long ii = i0; ii <= i1; ++ii) {
          const auto k = g.index(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj));
          if (!usable(H, v_d, k) || std::abs(g.z(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj)) - e) >= radius)
            continue;
          sup = std::max(sup, std::abs(vc[k] * hc[k]));
        }
      }
      std::mt19937_64 rng(piece_seed(np.seed, static_cast<int>(radius * 10), c, static_cast<int>(j)));
      const double hold = holder_in_disc(
          g, e, radius, np.alpha, core_pairs, rng, [&](std::size_t k) { return vc[k] * hc[k]; },
          [&](std::size_t k) { return usable(H, v_d, k); });
      const std::string tag = "_" + std::to_string(j + 1);
      rep.pieces.push_back({"core_sup" + tag, comp_name(c), region, sup});
      rep.pieces.push_back({"core_holder" + tag, comp_name(c), region, hold});
    }
  }
}

/// Weighted sups over nodes with all l_j > 2 (and min l_j < outer when finite).
struct WeightedSup {
  double re = 0.0, im = 0.0;
  long count = 0;
};

template <class Wre, class Wim>
WeightedSup weighted_sup(const ComplexField2D& H, const ComplexField2D& v_d, int c, const std::vector<cplx>& centers,
                         double outer, Wre&& wre, Wim&& wim) {
  const Grid2D& g = H.grid;
  const auto& hc = H.comp(c);
  const auto n2 = static_cast<long>(g.n2);
  double re = 0.0, im = 0.0;
  long count = 0;
#pragma omp parallel for schedule(static) reduction(max : re, im) reduction(+ : count)
  for (long j = 0; j < n2; ++j) {
    for (std::size_t i = 0; i < g.n1; ++i) {
      const auto k = g.index(i, static_cast<std::size_t>(j));
      if (!usable(H, v_d, k)) continue;
      const Distances d = distances(g.z(i, static_cast<std::size_t>(j)), centers);
      if (!(d.min > 2.0) || !(d.min < outer)) continue;
      ++count;
      re = std::max(re, std::abs(hc[k].real()) / wre(d));
      im = std::max(im, std::abs(hc[k].imag()) / wim(d));
    }
  }
  return {re, im, count};
}

}  // namespace

double eta1(double s) {
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  const double u = s - 1.0;
  return 1.0 - u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
}

NormParams make_norm_params(const VortexConfig& config, double alpha0, double alpha, double sigma) {
  validate(config);
  NormParams p;
  p.alpha = alpha;
  p.sigma = sigma;
  p.alpha0 = alpha0;
  p.r_eps = alpha0 / (config.epsilon * std::sqrt(config.log_eps()));
  validate(p, config);
  return p;
}

void validate(const NormParams& p, const VortexConfig& config) {
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw Error(ErrorCode::InvalidParams, "alpha must lie in (0,1)");
  if (!(p.sigma > 0.0 && p.sigma < 1.0)) throw Error(ErrorCode::InvalidParams, "sigma must lie in (0,1)");
  if (!(p.alpha0 > 0.0) || !(p.r_eps > 0.0)) throw Error(ErrorCode::InvalidParams, "alpha0 and r_eps must be positive");
  if (p.r_eps > 0.5 * config.d_tilde() * (1.0 + 1e-12)) {
    throw Error(ErrorCode::InvalidParams, "r_eps exceeds d~/2 (alpha0 too large for d_hat)");
  }
  if (!(p.region_factor > 0.0) || p.holder_centers < 1 || p.holder_pairs < 1) {
    throw Error(ErrorCode::InvalidParams, "invalid Hölder sampling parameters");
  }
}

double NormReport::total() const {
  double s = 0.0;
  for (const auto& p : pieces) s += p.value;
  return s;
}

double NormReport::piece_total(const std::string& name) const {
  double s = 0.0;
  for (const auto& p : pieces) {
    if (p.piece == name) s += p.value;
  }
  return s;
}

NormReport norm_starstar(const ComplexField2D& H, const ComplexField2D& v_d, const VortexConfig& config,
                         const NormParams& np) {
  validate(np, config);
  const auto centers = norm_centers(config);
  const double eps = config.epsilon;
  const double a = np.alpha, sg = np.sigma;
  const double outer = np.region_factor * np.r_eps;
  const Grid2D& g = H.grid;
  NormReport rep;
  core_pieces(H, v_d, centers, 3.0, np, std::min(10000, np.holder_centers * np.holder_pairs), rep);

  for (int c = 0; c < 2; ++c) {
    const WeightedSup far = weighted_sup(
        H, v_d, c, centers, std::numeric_limits<double>::infinity(),
        [&](const Distances& d) { return d.sum_pow(-2.0) + eps * eps; },
        [&](const Distances& d) { return d.sum_pow(-2.0 + sg) + std::pow(eps, 2.0 - sg); });
    if (far.count == 0) throw Error(ErrorCode::RegionEmpty, "grid has no valid node with all l_j > 2");
    rep.pieces.push_back({"far_re", comp_name(c), "l_j>2", far.re});
    rep.pieces.push_back({"far_im", comp_name(c), "l_j>2", far.im});

    // Weighted Hölder pieces: ball centres log-uniform in the distance to a
    // vortex between 2 and region_factor * r_eps.
    const auto& hc = H.comp(c);
    std::mt19937_64 rng(piece_seed(np.seed, 7, c, 0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, centers.size() - 1);
    double hre = 0.0, him = 0.0;
    int used = 0;
    for (int draw = 0; draw < 16 * np.holder_centers && used < np.holder_centers; ++draw) {
      const cplx e = centers[pick(rng)];
      const double rho = 2.0 * std::exp(unit(rng) * std::log(std::max(outer / 2.0, 1.0)));
      const auto k0 = nearest_node(g, e + std::polar(rho, 2.0 * std::numbers::pi * unit(rng)));
      if (!k0 || !usable(H, v_d, *k0)) continue;
      const cplx z0 = node_z(g, *k0);
      const Distances d = distances(z0, centers);
      if (!(d.min > 2.0) || !(d.min < outer)) continue;
      ++used;
      auto ok = [&](std::size_t k) { return usable(H, v_d, k); };
      const double qre = holder_in_disc(
          g, z0, 0.5 * d.min, a, np.holder_pairs, rng, [&](std::size_t k) { return cplx(hc[k].real(), 0.0); }, ok);
      const double qim = holder_in_disc(
          g, z0, 1.0, a, np.holder_pairs, rng, [&](std::size_t k) { return cplx(hc[k].imag(), 0.0); }, ok);
      hre = std::max(hre, qre / d.sum_pow(-2.0 - a));
      him = std::max(him, qim / d.sum_pow(-2.0 + sg));
    }
    const std::string region = "2<l_j;min l_j<" + fmt(outer);
    rep.pieces.push_back({"holder_re", comp_name(c), region, hre});
    rep.pieces.push_back({"holder_im", comp_name(c), region, him});
  }
  return rep;
}

NormReport sharpsharp_report(const ComplexField2D& H, const ComplexField2D& v_d, const VortexConfig& config,
                             const NormParams& np) {
  validate(np, config);
  const auto centers = norm_centers(config);
  const double sg = np.sigma;
  NormReport rep;
  core_pieces(H, v_d, centers, 4.0, np, std::min(10000, np.holder_centers * np.holder_pairs), rep);
  for (int c = 0; c < 2; ++c) {
    const WeightedSup s = weighted_sup(
        H, v_d, c, centers, np.r_eps, [](const Distances& d) { return d.sum_pow(-1.0); },
        [&](const Distances& d) { return d.sum_pow(-1.0 + sg); });
    if (s.count == 0) throw Error(ErrorCode::RegionEmpty, "grid has no valid node with 2 < l_j < r_eps");
    const std::string region = "2<l_j;min l_j<" + fmt(np.r_eps);
    rep.pieces.push_back({"slow_re", comp_name(c), region, s.re});
    rep.pieces.push_back({"slow_im", comp_name(c), region, s.im});
  }
  return rep;
}

double seminorm_sharpsharp(const ComplexField2D& H, const ComplexField2D& v_d, const VortexConfig& config,
                           const NormParams& normp) {
  return sharpsharp_report(H, v_d, config, normp).total();
}

cplx reflect(cplx z, cplx e_j) {
  const double r = std::abs(e_j);
  const cplx u = r > 0.0 ? e_j / r : cplx(1.0, 0.0);
  return e_j - u * u * std::conj(z - e_j);
}

OddEvenSplit odd_even_split(const ComplexField2D& H, const VortexConfig& config, const NormParams& np) {
  validate(np, config);
  const Grid2D& g = H.grid;
  const auto centers = config.centers();
  const double h = g.h();
  OddEvenSplit out{ComplexField2D(g), ComplexField2D(g)};
  out.odd.valid.assign(g.size(), 1);
  const auto n2 = static_cast<long>(g.n2);
  bool outside = false;
#pragma omp parallel for schedule(static) reduction(|| : outside)
  for (long jl = 0; jl < n2; ++jl) {
    const auto j = static_cast<std::size_t>(jl);
    for (std::size_t i = 0; i < g.n1; ++i) {
      const auto k = g.index(i, j);
      const cplx z = g.z(i, j);
      std::array<cplx, 2> acc{};
      bool ok = H.is_valid(k);
      for (const cplx& e : centers) {
        const double w = eta1(std::abs(z - e) / np.r_eps);
        if (w == 0.0) continue;
        const cplx rz = reflect(z, e);
        if (!g.contains(rz)) {
          outside = true;
          ok = false;
          continue;
        }
        const double fi = (rz.real() - g.x1_min) / h, fj = (rz.imag() - g.x2_min) / h;
        const double ri = std::round(fi), rj = std::round(fj);
        std::array<cplx, 2> hr;
        if (std::abs(fi - ri) < 1e-6 && std::abs(fj - rj) < 1e-6) {
          const auto kr = g.index(static_cast<std::size_t>(ri), static_cast<std::size_t>(rj));
          ok = ok && H.is_valid(kr);
          hr = {H.plus[kr], H.minus[kr]};
        } else {
          const auto i0 = std::min(static_cast<std::size_t>(fi), g.n1 - 2);
          const auto j0 = std::min(static_cast<std::size_t>(fj), g.n2 - 2);
          for (std::size_t dj = 0; dj < 2; ++dj) {
            for (std::size_t di = 0; di < 2; ++di) ok = ok && H.is_valid(g.index(i0 + di, j0 + dj));
          }
          hr = {*H.interpolate(0, rz), *H.interpolate(1, rz)};
        }
        for (int c = 0; c < 2; ++c) acc[c] += w * 0.5 * (H.comp(c)[k] + std::conj(hr[c]));
      }
      out.odd.plus[k] = acc[0];
      out.odd.minus[k] = acc[1];
      out.even.plus[k] = H.plus[k] - acc[0];
      out.even.minus[k] = H.minus[k] - acc[1];
      out.odd.valid[k] = ok ? 1 : 0;
    }
  }
  if (outside) {
    throw Error(ErrorCode::ReflectionOutsideGrid, "reflected point of a node inside the cutoff lies outside the grid");
  }
  out.even.valid = out.odd.valid;
  return out;
}

cplx R_far(cplx z, const VortexConfig& config) {
  const double dt = config.d_tilde();
  const double e2 = config.epsilon * config.epsilon;
  const cplx w1 = z - cplx(dt, 0.0), w2 = z + cplx(dt, 0.0);
  const double l1 = std::abs(w1), l2 = std::abs(w2);
  const double c1 = w1.real() / l1, s1 = w1.imag() / l1;
  const double c2 = w2.real() / l2, s2 = w2.imag() / l2;
  const double cos12 = c1 * c2 + s1 * s2;
  const double ds_minus_2 = dt * c1 / l1 - dt * c2 / l2;
  const double dss = dt * (s2 / l2 - s1 / l1) - 2.0 * dt * dt * (s1 * c1 / (l1 * l1) + s2 * c2 / (l2 * l2));
  return 2.0 * I * cos12 / (l1 * l2) + e2 * dss + I * e2 * ds_minus_2 * ds_minus_2;
}

AlphaBetaSplit split_R_alpha_beta(const ComplexField2D& R_o, const VortexConfig& config, const NormParams& np) {
  validate(np, config);
  if (config.k != 2 || config.central_antivortex || config.conjugate_minus) {
    throw Error(ErrorCode::InvalidParams, "alpha/beta split is defined for the standard k = 2 pair");
  }
  const Grid2D& g = R_o.grid;
  const auto centers = config.centers();
  AlphaBetaSplit out{ComplexField2D(g), ComplexField2D(g)};
  out.alpha.valid.assign(g.size(), 0);
  const auto n2 = static_cast<long>(g.n2);
#pragma omp parallel for schedule(static)
  for (long jl = 0; jl < n2; ++jl) {
    const auto j = static_cast<std::size_t>(jl);
    for (std::size_t i = 0; i < g.n1; ++i) {
      const auto k = g.index(i, j);
      if (!R_o.is_valid(k)) continue;
      const cplx z = g.z(i, j);
      cplx a = 0.0;
      for (const cplx& e : centers) {
        const double w = eta1(std::abs(z - e) / np.r_eps);
        if (w == 0.0) continue;
        a += w * 0.5 * (R_far(z, config) + std::conj(R_far(reflect(z, e), config)));
      }
      out.alpha.plus[k] = out.alpha.minus[k] = a;
      out.beta.plus[k] = R_o.plus[k] - a;
      out.beta.minus[k] = R_o.minus[k] - a;
      out.alpha.valid[k] = 1;
    }
  }
  out.beta.valid = out.alpha.valid;
  return out;
}

}  // namespace glh
