#include "glh/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "glh/errors.hpp"

namespace glh {

namespace {

constexpr double kPi = std::numbers::pi;

bool central(int central_degree) { return central_degree == -1; }

double scaled_energy(int k, double log_eps, int central_degree, double x) {
  FilamentConfig c;
  c.k = k;
  c.radius_scaled = x;
  c.epsilon = std::exp(-log_eps);
  c.central_degree = central_degree;
  return interaction_energy(c);
}

double min_pair_distance(const std::vector<cplx>& q, int central_degree) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = a + 1; b < q.size(); ++b) m = std::min(m, std::abs(q[a] - q[b]));
    if (central(central_degree)) m = std::min(m, std::abs(q[a]));
  }
  return m;
}

}  // namespace

double FilamentConfig::log_eps() const { return std::abs(std::log(epsilon)); }

double FilamentConfig::rho() const { return radius_scaled / std::sqrt(log_eps()); }

void validate(const FilamentConfig& c) {
  if (c.k < 1) throw Error(ErrorCode::InvalidParams, "k must be >= 1");
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw Error(ErrorCode::InvalidParams, "epsilon must lie in (0,1)");
  if (c.central_degree != 0 && c.central_degree != -1) {
    throw Error(ErrorCode::InvalidParams, "central degree must be 0 or -1");
  }
  if (central(c.central_degree) && c.k < 4) {
    throw Error(ErrorCode::InvalidParams, "a central anti-vortex requires k >= 4");
  }
  if (!(c.radius_scaled > 0.0)) throw Error(ErrorCode::InvalidParams, "radius must be positive");
}

double pair_constant(int k) {
  double s = 0.0;
  for (int j = 0; j < k; ++j) {
    for (int l = 0; l < k; ++l) {
      if (j != l) s += std::log(2.0 * std::sin(kPi * std::abs(j - l) / k));
    }
  }
  return s;
}

double interaction_energy(const FilamentConfig& config) {
  validate(config);
  const int k = config.k;
  const double rho = config.rho();
  const double lr = std::log(rho);
  double e = config.log_eps() * 0.5 * k * rho * rho - k * (k - 1.0) * lr - pair_constant(k);
  if (central(config.central_degree)) e += 2.0 * k * lr;
  return 2.0 * kPi * kPi * e;
}

double equilibrium_radius(int k, double epsilon, int central_degree) {
  FilamentConfig probe;
  probe.k = k;
  probe.epsilon = epsilon;
  probe.central_degree = central_degree;
  validate(probe);
  const double le = probe.log_eps();
  auto f = [&](double x) { return scaled_energy(k, le, central_degree, x); };

  // Golden section on the scaled radius.
  double a = 1e-3, b = 4.0 + std::sqrt(static_cast<double>(k));
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-9 * (1.0 + std::abs(c))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  if (x < 2e-3) throw Error(ErrorCode::NoInteriorMinimum, "energy decreases towards rho = 0");

  // Newton polish on central differences.
  for (int it = 0; it < 20; ++it) {
    const double del = 1e-4 * x;
    const double fp = f(x + del), f0 = f(x), fm = f(x - del);
    const double g = (fp - fm) / (2.0 * del);
    const double hh = (fp - 2.0 * f0 + fm) / (del * del);
    if (!(hh > 0.0)) break;
    const double step = g / hh;
    x -= step;
    if (std::abs(step) < 1e-14 * x) break;
  }
  return x / std::sqrt(le);
}

double energy_second_derivative(const FilamentConfig& config) {
  validate(config);
  const double rho = config.rho();
  const double del = 1e-4 * rho;
  const double sl = std::sqrt(config.log_eps());
  auto f = [&](double r) {
    FilamentConfig c = config;
    c.radius_scaled = r * sl;
    return interaction_energy(c);
  };
  return (f(rho + del) - 2.0 * f(rho) + f(rho - del)) / (del * del);
}

double polygon_energy(const std::vector<cplx>& q, int central_degree) {
  double e = 0.0;
  for (std::size_t l = 0; l < q.size(); ++l) {
    e += 0.5 * std::norm(q[l]);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j != l) e -= std::log(std::abs(q[j] - q[l]));
    }
    if (central(central_degree)) e += 2.0 * std::log(std::abs(q[l]));
  }
  return e;
}

std::vector<cplx> polygon_gradient(const std::vector<cplx>& q, int central_degree) {
  std::vector<cplx> g(q.size());
  for (std::size_t l = 0; l < q.size(); ++l) {
    cplx s = q[l];
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j == l) continue;
      const cplx d = q[l] - q[j];
      s -= 2.0 * d / std::norm(d);
    }
    if (central(central_degree)) s += 2.0 * q[l] / std::norm(q[l]);
    g[l] = s;
  }
  return g;
}

RelaxResult relax_polygon(int k, double epsilon, int central_degree, const std::vector<cplx>& perturbation,
                          const RelaxOptions& opt) {
  if (static_cast<int>(perturbation.size()) != k) {
    throw Error(ErrorCode::InvalidParams, "perturbation must have one entry per vortex");
  }
  for (const cplx& p : perturbation) {
    if (std::abs(p.real()) > 0.1 + 1e-12 || std::abs(p.imag()) > 0.1 + 1e-12) {
      throw Error(ErrorCode::InvalidParams, "perturbation exceeds 10% of the equilibrium radius");
    }
  }
  const double rho_star = equilibrium_radius(k, epsilon, central_degree);
  const double x_star = rho_star * std::sqrt(std::abs(std::log(epsilon)));
  std::vector<cplx> polygon(static_cast<std::size_t>(k));
  std::vector<cplx> q(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l) {
    polygon[static_cast<std::size_t>(l)] = std::polar(x_star, 2.0 * kPi * l / k);
    q[static_cast<std::size_t>(l)] = polygon[static_cast<std::size_t>(l)] + x_star * perturbation[static_cast<std::size_t>(l)];
  }

  RelaxResult res;
  res.trajectory.push_back(q);
  auto grad_norm = [](const std::vector<cplx>& g) {
    double s = 0.0;
    for (const cplx& v : g) s += std::norm(v);
    return std::sqrt(s);
  };
  std::vector<cplx> g = polygon_gradient(q, central_degree);
  res.gradient_norm = grad_norm(g);
  int it = 0;
  for (; it < opt.max_iterations && res.gradient_norm > opt.gradient_tol; ++it) {
    for (std::size_t l = 0; l < q.size(); ++l) q[l] -= opt.step * g[l];
    const double md = min_pair_distance(q, central_degree);
    if (!(md >= 1e-6) || !std::isfinite(md)) throw Error(ErrorCode::Divergence, "vortices collided during relaxation");
    g = polygon_gradient(q, central_degree);
    res.gradient_norm = grad_norm(g);
    if (opt.record_every > 0 && (it + 1) % opt.record_every == 0) res.trajectory.push_back(q);
  }
  res.iterations = it;
  res.final_positions = q;
  if (res.trajectory.back() != q) res.trajectory.push_back(q);

  double mr = 0.0;
  cplx corr = 0.0;
  for (std::size_t l = 0; l < q.size(); ++l) {
    mr += std::abs(q[l]);
    corr += q[l] * std::conj(polygon[l]);
  }
  res.mean_radius_scaled = mr / k;
  const cplx rot = std::abs(corr) > 0.0 ? corr / std::abs(corr) : cplx(1.0, 0.0);
  for (std::size_t l = 0; l < q.size(); ++l) {
    res.alignment_error = std::max(res.alignment_error, std::abs(q[l] - rot * polygon[l]));
  }
  return res;
}

}  // namespace glh
