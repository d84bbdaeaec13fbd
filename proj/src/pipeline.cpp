#include "glh/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>

#include <json.hpp>

#include "glh/csv.hpp"
#include "glh/energy.hpp"
#include "glh/errors.hpp"
#include "glh/fourier.hpp"
#include "glh/helix.hpp"
#include "glh/kernel.hpp"
#include "glh/reduction.hpp"
#include "glh/residual.hpp"

namespace glh {

namespace {

namespace fs = std::filesystem;

std::string eps_tag(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0e", eps);
  return buf;
}

std::string num_tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct Context {
  const RunConfig& cfg;
  fs::path dir;
  RunSummary& summary;

  std::string file(const std::string& name) {
    summary.artifacts.push_back(name);
    return (dir / name).string();
  }
  void metric(const std::string& name, double v) { summary.metrics.emplace_back(name, v); }
};

void write_report(const NormReport& r, const std::string& path) {
  CsvWriter w(path, {"piece", "component", "region", "value"});
  for (const auto& p : r.pieces) {
    w << p.piece << p.component << p.region << p.value;
    w.end_row();
  }
  w.close();
}

double sup_valid(const ComplexField2D& f) {
  double m = 0.0;
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    if (!f.is_valid(i)) continue;
    m = std::max({m, std::abs(f.plus[i]), std::abs(f.minus[i])});
  }
  return m;
}

QuadratureSpec quad_spec(const RunConfig& cfg, double alpha0) {
  QuadratureSpec q;
  q.n_theta = cfg.quad_theta;
  q.radial_ratio = cfg.quad_ratio;
  q.alpha0 = alpha0;
  return q;
}

DhatResult configured_dhat(const ProfilePair& profile, const RunConfig& cfg, double eps, double alpha0) {
  return solve_dhat(profile, eps, quad_spec(cfg, alpha0), cfg.dhat_lo, cfg.dhat_hi, cfg.dhat_tol);
}

// ---------------------------------------------------------------- profile

void run_profile(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ProfilePair pr = solve_configured_profile(cfg);
  {
    CsvWriter w(ctx.file("profile.csv"), {"ell", "w_plus", "dw_plus", "w_minus", "dw_minus"});
    for (std::size_t i = 0; i < pr.size(); ++i) {
      w << pr.grid.nodes[i] << pr.w[0][i] << pr.dw[0][i] << pr.w[1][i] << pr.dw[1][i];
      w.end_row();
    }
    w.close();
  }
  const ProfileValidation v = validate_profile(pr);
  const TailFit fit = tail_fit(pr, cfg.tail_fit_lo, cfg.tail_fit_hi);
  const auto [cp, cm] = tail_constants(pr.params, {cfg.degree_plus, cfg.degree_minus});
  const double closed[2] = {cp, cm};
  {
    CsvWriter w(ctx.file("profile_validation.csv"), {"check", "value"});
    auto row = [&](const std::string& name, double value) {
      w << name << value;
      w.end_row();
    };
    row("nodes", static_cast<double>(pr.size()));
    row("newton_iterations", pr.iterations);
    row("max_scaled_residual", pr.residual);
    row("bound_violations", static_cast<double>(v.bound_violations.size()));
    row("monotonicity_checked", v.monotonicity_checked ? 1.0 : 0.0);
    row("monotonicity_violations", static_cast<double>(v.monotonicity_violations.size()));
    for (int c = 0; c < 2; ++c) {
      const std::string s = c == 0 ? "plus" : "minus";
      row("core_slope_" + s, v.slope[c]);
      row("core_slope_deviation_" + s, v.slope_deviation[c]);
      row("tail_c_closed_" + s, closed[c]);
      row("tail_c_fit_" + s, fit.c_value[c]);
      row("tail_c_fit_deriv_" + s, fit.c_deriv[c]);
      row("tail_c_rel_error_" + s, std::abs(fit.c_value[c] - closed[c]) / std::abs(closed[c]));
    }
    w.close();
  }
  ctx.metric("max_scaled_residual", pr.residual);
  ctx.metric("tail_c_fit_plus", fit.c_value[0]);
  ctx.metric("tail_c_fit_minus", fit.c_value[1]);
  if (!v.bound_violations.empty()) {
    throw Error(ErrorCode::ValidationFailure,
                "bounds 0 < W < t violated at " + std::to_string(v.bound_violations.size()) + " nodes");
  }
  if (!v.monotonicity_violations.empty()) {
    throw Error(ErrorCode::ValidationFailure, "monotonicity W' > 0 violated at " +
                                                  std::to_string(v.monotonicity_violations.size()) + " nodes");
  }
}

// ---------------------------------------------------------------- residual

void run_residual(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ProfilePair pr = solve_configured_profile(cfg);
  CsvWriter sum(ctx.file("residual.csv"),
                {"epsilon", "h", "nodes", "sup_S0", "sup_S1", "sup_R", "modulus_limit"});
  for (double eps : cfg.epsilons) {
    const VortexConfig vc = vortex_config(cfg, eps);
    const Grid2D g = study_grid(vc, cfg);
    const ComplexField2D v = build_ansatz(pr, vc, g);
    ComplexField2D s = apply_S0(v, pr.params);
    const double sup0 = sup_valid(s);
    double sup1 = 0.0;
    {
      const ComplexField2D s1 = apply_S1(v, vc);
      sup1 = sup_valid(s1);
      for (std::size_t i = 0; i < g.size(); ++i) {
        s.plus[i] += s1.plus[i];
        s.minus[i] += s1.minus[i];
      }
    }
    const ComplexField2D R = compute_R(s, v, pr.params);
    s = ComplexField2D();
    const double supR = sup_valid(R);
    sum << eps << g.h() << g.size() << sup0 << sup1 << supR << modulus_limit_check(v);
    sum.end_row();

    const double c1 = vc.d_tilde(), hw = cfg.window_half_width;
    CsvWriter w(ctx.file("residual_window_eps" + eps_tag(eps) + ".csv"),
                {"x1", "x2", "re_plus", "im_plus", "re_minus", "im_minus", "mask"});
    for (std::size_t j = 0; j < g.n2; ++j) {
      const double x2 = g.x2(j);
      if (std::abs(x2) > hw) continue;
      for (std::size_t i = 0; i < g.n1; ++i) {
        const double x1 = g.x1(i);
        if (std::abs(x1 - c1) > hw) continue;
        const std::size_t k = g.index(i, j);
        w << x1 << x2 << R.plus[k].real() << R.plus[k].imag() << R.minus[k].real() << R.minus[k].imag()
          << (R.is_valid(k) ? 1 : 0);
        w.end_row();
      }
    }
    w.close();
    ctx.metric("sup_R_eps" + eps_tag(eps), supR);
  }
  sum.close();
}

// ---------------------------------------------------------------- norms and sweep

void run_norms(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ProfilePair pr = solve_configured_profile(cfg);
  CsvWriter sum(ctx.file("norms.csv"), {"epsilon", "field", "norm", "value", "scaled"});
  for (double eps : cfg.epsilons) {
    const EpsilonStudy st = study_epsilon(pr, cfg, eps);
    const std::string tag = eps_tag(eps);
    const double le = st.log_eps();
    struct Item {
      const char* field;
      const char* norm;
      const NormReport* report;
      double scale;
    };
    const Item items[] = {
        {"R", "starstar", &st.R, le},
        {"R_even", "starstar", &st.R_even, 1.0},
        {"R_odd", "starstar", &st.R_odd, 1.0},
        {"R_alpha", "sharpsharp", &st.R_alpha, std::sqrt(le) / eps},
        {"R_beta", "starstar", &st.R_beta, 1.0 / (eps * std::sqrt(le))},
    };
    for (const Item& it : items) {
      write_report(*it.report, ctx.file("norms_eps" + tag + "_" + it.field + ".csv"));
      sum << eps << it.field << it.norm << it.report->total() << it.report->total() * it.scale;
      sum.end_row();
    }
    ctx.metric("split_error_eps" + tag, st.split_error);
  }
  sum.close();
}

void run_sweep(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ProfilePair pr = solve_configured_profile(cfg);
  CsvWriter w(ctx.file("sweep.csv"),
              {"epsilon", "h", "nodes", "norm_R", "norm_R_scaled", "norm_R_even", "norm_R_odd", "sharpsharp_R_alpha",
               "sharpsharp_R_alpha_scaled", "norm_R_beta", "norm_R_beta_scaled", "split_error", "d_hat_star", "T0",
               "T1"});
  std::vector<double> rs, as, bs;
  for (double eps : cfg.epsilons) {
    const EpsilonStudy st = study_epsilon(pr, cfg, eps);
    const DhatResult dh = configured_dhat(pr, cfg, eps, cfg.alpha0);
    w << eps << st.h << st.nodes << st.R.total() << st.R_scaled() << st.R_even.total() << st.R_odd.total()
      << st.R_alpha.total() << st.alpha_scaled() << st.R_beta.total() << st.beta_scaled() << st.split_error
      << dh.d_hat << dh.T0 << dh.T1;
    w.end_row();
    rs.push_back(st.R_scaled());
    as.push_back(st.alpha_scaled());
    bs.push_back(st.beta_scaled());
  }
  w.close();
  auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi / *lo;
  };
  ctx.metric("norm_R_scaled_spread", spread(rs));
  ctx.metric("sharpsharp_R_alpha_scaled_spread", spread(as));
  ctx.metric("norm_R_beta_scaled_spread", spread(bs));
}

// ---------------------------------------------------------------- fourier

void write_modes(CsvWriter& w, double eps, const char* field, const ModeTable& t) {
  for (std::size_t r = 0; r < t.radii.size(); ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k <= t.K; ++k) {
        const cplx ck = t.c(c, r, k);
        const auto kk = static_cast<std::size_t>(k);
        w << eps << field << t.radii[r] << (c == 0 ? "plus" : "minus") << k << ck.real() << ck.imag()
          << t.h1[c][r][kk] << t.h2[c][r][kk] << t.re_cos[c][r][kk] << t.im_sin[c][r][kk];
        w.end_row();
      }
    }
  }
}

void run_fourier(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ProfilePair pr = solve_configured_profile(cfg);
  CsvWriter modes(ctx.file("fourier_modes.csv"), {"epsilon", "field", "radius", "component", "k", "re_c", "im_c",
                                                   "h1", "h2", "re_cos", "im_sin"});
  CsvWriter par(ctx.file("fourier_parity.csv"), {"epsilon", "field", "radius", "odd_energy", "even_energy"});
  for (double eps : cfg.epsilons) {
    const VortexConfig vc = vortex_config(cfg, eps);
    const Grid2D g = study_grid(vc, cfg);
    const ComplexField2D v = build_ansatz(pr, vc, g);
    ComplexField2D R;
    {
      const ComplexField2D s = apply_S(v, pr.params, vc);
      R = compute_R(s, v, pr.params);
    }
    const cplx e1 = vc.centers().front();
    const ModeTable tR = angular_modes(R, e1, cfg.fourier_radii, cfg.fourier_K, 0);
    const OddEvenSplit oe = odd_even_split(R, vc, norm_params(cfg, vc));
    const ModeTable tO = angular_modes(oe.odd, e1, cfg.fourier_radii, cfg.fourier_K, 0);
    const ModeTable tE = angular_modes(oe.even, e1, cfg.fourier_radii, cfg.fourier_K, 0);
    const std::pair<const char*, const ModeTable*> tables[] = {{"R", &tR}, {"R_odd", &tO}, {"R_even", &tE}};
    for (const auto& [name, t] : tables) {
      write_modes(modes, eps, name, *t);
      for (std::size_t r = 0; r < t->radii.size(); ++r) {
        double odd = 0.0, even = 0.0;
        for (int k = 0; k <= t->K; ++k) (k % 2 == 1 ? odd : even) += t->mode_energy(r, k);
        par << eps << name << t->radii[r] << odd << even;
        par.end_row();
      }
    }
  }
  modes.close();
  par.close();
}

// ---------------------------------------------------------------- kernel

void run_kernel(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ProfilePair pr = solve_configured_profile(cfg);
  const KernelResidualReport tr = kernel_residual(pr, cfg.kernel_h, cfg.kernel_half_width);
  const KernelResidualReport ctl =
      kernel_residual(pr, cfg.kernel_h, random_smooth_field(cfg.seed), cfg.kernel_half_width);
  CsvWriter w(ctx.file("kernel.csv"), {"h", "sup_residual", "component"});
  for (const auto& r : tr.rows) {
    w << r.h << r.sup_plus << "plus";
    w.end_row();
    w << r.h << r.sup_minus << "minus";
    w.end_row();
  }
  for (const auto& r : ctl.rows) {
    w << r.h << r.sup() << "control";
    w.end_row();
  }
  w.close();
  CsvWriter o(ctx.file("kernel_order.csv"), {"field", "order"});
  o << "translation" << tr.order;
  o.end_row();
  o << "control" << ctl.order;
  o.end_row();
  o.close();
  ctx.metric("translation_order", tr.order);
  ctx.metric("control_order", ctl.order);
}

// ---------------------------------------------------------------- reduce

void run_reduce(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ProfilePair pr = solve_configured_profile(cfg);
  for (double a0 : cfg.quad_alpha0) {
    CsvWriter w(ctx.file("reduce_alpha0_" + num_tag(a0) + ".csv"), {"epsilon", "d_hat_star", "T0", "T1"});
    for (double eps : cfg.epsilons) {
      const DhatResult r = configured_dhat(pr, cfg, eps, a0);
      w << eps << r.d_hat << r.T0 << r.T1;
      w.end_row();
      ctx.metric("d_hat_star_alpha0_" + num_tag(a0) + "_eps" + eps_tag(eps), r.d_hat);
    }
    w.close();
  }
  const double eps = cfg.epsilons.back();
  CsvWriter e(ctx.file("equilibrium.csv"), {"k", "central", "rho_star_scaled"});
  for (double kd : cfg.energy_k) {
    const int k = static_cast<int>(std::lround(kd));
    const double sl = std::sqrt(std::abs(std::log(eps)));
    e << k << 0 << equilibrium_radius(k, eps, 0) * sl;
    e.end_row();
    if (k >= 4) {
      e << k << 1 << equilibrium_radius(k, eps, -1) * sl;
      e.end_row();
    }
  }
  e.close();
}

// ---------------------------------------------------------------- helix

void run_helix(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const int central = cfg.central ? -1 : 0;
  FilamentConfig fc;
  fc.k = cfg.k;
  fc.epsilon = cfg.helix_epsilon;
  fc.central_degree = central;
  fc.radius_scaled = equilibrium_radius(cfg.k, cfg.helix_epsilon, central) * std::sqrt(fc.log_eps());
  const auto curves = filament_curves(fc, cfg.helix_samples);
  export_curves(curves, ctx.file("curves.csv"));

  const ProfilePair pr = solve_configured_profile(cfg);
  VortexConfig vc = vortex_config(cfg, cfg.helix_epsilon);
  vc.d_hat = fc.radius_scaled;
  const Grid2D g = square_grid(vc.d_tilde() + cfg.slice_margin, cfg.slice_h);
  const ComplexField2D u = build_ansatz(pr, vc, g);
  for (std::size_t i = 0; i < cfg.slice_t.size(); ++i) {
    for (SliceFrame f : {SliceFrame::CoRotating, SliceFrame::Lab}) {
      export_slice(u, cfg.k, cfg.slice_t[i], f,
                   ctx.file("slice_t" + std::to_string(i) + "_" + frame_suffix(f) + ".csv"));
    }
  }
  ctx.metric("rho_star_scaled", fc.radius_scaled);
  ctx.metric("d_tilde", vc.d_tilde());
}

using Runner = std::function<void(Context&)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"profile", run_profile}, {"residual", run_residual}, {"norms", run_norms}, {"fourier", run_fourier},
      {"kernel", run_kernel},   {"reduce", run_reduce},     {"sweep", run_sweep}, {"helix", run_helix},
  };
  return r;
}

void write_manifest(const std::string& name, const RunConfig& cfg, const RunSummary& s, const fs::path& dir,
                    const std::string& status) {
  nlohmann::ordered_json j;
  j["subcommand"] = name;
  j["version"] = code_version();
  j["status"] = status;
  j["wall_time_seconds"] = s.wall_seconds;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config_values(cfg)) c[k] = v;
  j["config"] = c;
  j["artifacts"] = s.artifacts;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : s.metrics) m[k] = v;
  j["metrics"] = m;
  std::ofstream out(dir / "manifest.json");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + (dir / "manifest.json").string());
}

}  // namespace

const char* code_version() { return "glhelix 1.0.0"; }

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& r : runners()) n.push_back(r.first);
    return n;
  }();
  return names;
}

ProfilePair solve_configured_profile(const RunConfig& cfg) {
  const RadialGrid g = make_geometric_grid(cfg.profile_first, cfg.profile_ratio, cfg.profile_L);
  ProfileOptions opt;
  opt.max_iterations = cfg.profile_max_iterations;
  return solve_profile(cfg.params, {cfg.degree_plus, cfg.degree_minus}, g, cfg.profile_tol, opt);
}

VortexConfig vortex_config(const RunConfig& cfg, double epsilon) {
  VortexConfig vc;
  vc.epsilon = epsilon;
  vc.k = cfg.k;
  vc.d_hat = cfg.d_hat;
  vc.central_antivortex = cfg.central;
  validate(vc);
  return vc;
}

Grid2D study_grid(const VortexConfig& vc, const RunConfig& cfg) {
  if (!(cfg.grid_h > 0.0) || !(cfg.grid_margin >= 0.0) || !(cfg.grid_below >= 0.0)) {
    throw Error(ErrorCode::InvalidParams, "grid spacing must be positive and extents non-negative");
  }
  const double dt = vc.d_tilde();
  if (vc.k == 2 && !vc.central_antivortex) {
    const double m = std::max(1.0, std::round(dt / cfg.grid_h - 0.5));
    const double h = dt / (m + 0.5);
    const double x1 = 2.0 * dt + cfg.grid_margin;
    return covering_grid(-x1, x1, -cfg.grid_below, 1.25 * dt + cfg.grid_margin, h);
  }
  return square_grid(dt + cfg.grid_margin, cfg.grid_h);
}

NormParams norm_params(const RunConfig& cfg, const VortexConfig& vc) {
  NormParams np = make_norm_params(vc, cfg.alpha0, cfg.alpha, cfg.sigma);
  np.region_factor = cfg.region_factor;
  np.holder_centers = cfg.holder_centers;
  np.holder_pairs = cfg.holder_pairs;
  np.seed = cfg.seed;
  validate(np, vc);
  return np;
}

double EpsilonStudy::log_eps() const { return std::abs(std::log(epsilon)); }
double EpsilonStudy::R_scaled() const { return R.total() * log_eps(); }
double EpsilonStudy::alpha_scaled() const { return R_alpha.total() / (epsilon / std::sqrt(log_eps())); }
double EpsilonStudy::beta_scaled() const { return R_beta.total() / (epsilon * std::sqrt(log_eps())); }

EpsilonStudy study_epsilon(const ProfilePair& profile, const RunConfig& cfg, double epsilon) {
  const VortexConfig vc = vortex_config(cfg, epsilon);
  const NormParams np = norm_params(cfg, vc);
  const Grid2D g = study_grid(vc, cfg);
  EpsilonStudy st;
  st.epsilon = epsilon;
  st.h = g.h();
  st.nodes = g.size();

  const ComplexField2D v = build_ansatz(profile, vc, g);
  ComplexField2D R;
  {
    const ComplexField2D s = apply_S(v, profile.params, vc);
    R = compute_R(s, v, profile.params);
  }
  st.R = norm_starstar(R, v, vc, np);
  OddEvenSplit oe = odd_even_split(R, vc, np);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!R.is_valid(i)) continue;
    st.split_error = std::max({st.split_error, std::abs(oe.odd.plus[i] + oe.even.plus[i] - R.plus[i]),
                               std::abs(oe.odd.minus[i] + oe.even.minus[i] - R.minus[i])});
  }
  R = ComplexField2D();
  st.R_even = norm_starstar(oe.even, v, vc, np);
  oe.even = ComplexField2D();
  st.R_odd = norm_starstar(oe.odd, v, vc, np);
  const AlphaBetaSplit ab = split_R_alpha_beta(oe.odd, vc, np);
  oe.odd = ComplexField2D();
  st.R_alpha = sharpsharp_report(ab.alpha, v, vc, np);
  st.R_beta = norm_starstar(ab.beta, v, vc, np);
  return st;
}

RunSummary run_subcommand(const std::string& name, const RunConfig& cfg, const std::string& out_dir) {
  const auto& rs = runners();
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.first == name; });
  if (it == rs.end()) throw Error(ErrorCode::InvalidParams, "unknown subcommand '" + name + "'");
  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot create output directory " + out_dir);

  RunSummary summary;
  Context ctx{cfg, dir, summary};
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  try {
    it->second(ctx);
  } catch (const Error& e) {
    summary.wall_seconds = elapsed();
    write_manifest(name, cfg, summary, dir, std::string("failed: ") + e.what());
    throw;
  }
  summary.wall_seconds = elapsed();
  write_manifest(name, cfg, summary, dir, "ok");
  return summary;
}

}  // namespace glh
