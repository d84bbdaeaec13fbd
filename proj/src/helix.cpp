#include "glh/helix.hpp"

#include <cmath>
#include <numbers>

#include "glh/csv.hpp"
#include "glh/errors.hpp"

namespace glh {

std::vector<std::array<cplx, 2>> reconstruct_3d(const ComplexField2D& u, int k,
                                                const std::vector<HelixProbe>& probes) {
  std::vector<std::array<cplx, 2>> out(probes.size());
  const auto n = static_cast<long>(probes.size());
  bool outside = false;
#pragma omp parallel for schedule(static) reduction(|| : outside)
  for (long q = 0; q < n; ++q) {
    const HelixProbe& p = probes[static_cast<std::size_t>(q)];
    // The field is 2 pi periodic in t; reducing first makes t = 2 pi reproduce t = 0 bitwise.
    const double t = std::fmod(p.t, 2.0 * std::numbers::pi);
    const cplx z = std::polar(p.r, p.theta - t);
    const auto vp = u.interpolate(0, z);
    const auto vm = u.interpolate(1, z);
    if (!vp || !vm) {
      outside = true;
      continue;
    }
    const cplx phase = std::polar(1.0, k * t);
    out[static_cast<std::size_t>(q)] = {phase * *vp, phase * *vm};
  }
  if (outside) throw Error(ErrorCode::ProbeOutsideGrid, "probe maps outside the 2D grid");
  return out;
}

std::vector<HelixCurve> filament_curves(const FilamentConfig& config, int n_samples) {
  validate(config);
  if (n_samples < 16) throw Error(ErrorCode::InvalidParams, "at least 16 samples per curve");
  const double two_pi = 2.0 * std::numbers::pi;
  const double rho = config.rho();
  std::vector<HelixCurve> curves;
  auto t_at = [&](int m) { return m == n_samples - 1 ? two_pi : two_pi * m / (n_samples - 1); };
  if (config.central_degree == -1) {
    HelixCurve axis;
    axis.branch = 0;
    for (int m = 0; m < n_samples; ++m) axis.samples.push_back({t_at(m), 0.0, 0.0, t_at(m)});
    curves.push_back(std::move(axis));
  }
  for (int j = 1; j <= config.k; ++j) {
    HelixCurve c;
    c.branch = j;
    const double phase = two_pi * (j - 1) / config.k;
    for (int m = 0; m < n_samples; ++m) {
      // Sample the angle modulo 2 pi so that t = 0 and t = 2 pi give identical points.
      const double t = t_at(m);
      const double ang = m == n_samples - 1 ? phase : t + phase;
      c.samples.push_back({t, rho * std::cos(ang), rho * std::sin(ang), t});
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

void export_curves(const std::vector<HelixCurve>& curves, const std::string& path) {
  CsvWriter w(path, {"branch", "t", "x", "y", "z"});
  for (const auto& c : curves) {
    for (const auto& s : c.samples) {
      w << c.branch << s.t << s.x << s.y << s.z;
      w.end_row();
    }
  }
  w.close();
}

std::vector<HelixCurve> read_curves(const std::string& path) {
  const CsvTable t = read_csv(path);
  std::vector<HelixCurve> out;
  for (const auto& row : t.rows) {
    if (row.size() != 5) throw Error(ErrorCode::IoFailure, "malformed curve row in " + path);
    const int b = std::stoi(row[0]);
    if (out.empty() || out.back().branch != b) out.push_back({b, {}});
    out.back().samples.push_back({std::stod(row[1]), std::stod(row[2]), std::stod(row[3]), std::stod(row[4])});
  }
  return out;
}

const char* frame_suffix(SliceFrame f) { return f == SliceFrame::CoRotating ? "corot" : "lab"; }

std::size_t export_slice(const ComplexField2D& u, int k, double t, SliceFrame frame, const std::string& path) {
  const Grid2D& g = u.grid;
  CsvWriter w(path, {"t", "x1", "x2", "re_plus", "im_plus", "re_minus", "im_minus"});
  const cplx phase = std::polar(1.0, k * t);
  const cplx back = std::polar(1.0, -t);
  for (std::size_t j = 0; j < g.n2; ++j) {
    for (std::size_t i = 0; i < g.n1; ++i) {
      const cplx z = g.z(i, j);
      cplx vp, vm;
      if (frame == SliceFrame::CoRotating) {
        const auto kk = g.index(i, j);
        vp = phase * u.plus[kk];
        vm = phase * u.minus[kk];
      } else {
        const auto a = u.interpolate(0, z * back);
        const auto b = u.interpolate(1, z * back);
        if (!a || !b) continue;
        vp = phase * *a;
        vm = phase * *b;
      }
      w << t << z.real() << z.imag() << vp.real() << vp.imag() << vm.real() << vm.imag();
      w.end_row();
    }
  }
  w.close();
  return w.rows();
}

}  // namespace glh
