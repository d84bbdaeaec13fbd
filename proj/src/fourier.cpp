#include "glh/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

#include "glh/errors.hpp"

namespace glh {

namespace {

int angular_size(int K) {
  int n = 64;
  while (n < 4 * K) n *= 2;
  return n;
}

bool circle_usable(const ComplexField2D& H, cplx z) {
  if (!H.grid.contains(z)) return false;
  if (H.valid.empty()) return true;
  const Grid2D& g = H.grid;
  const double h = g.h();
  const auto i = std::min(static_cast<std::size_t>((z.real() - g.x1_min) / h), g.n1 - 2);
  const auto j = std::min(static_cast<std::size_t>((z.imag() - g.x2_min) / h), g.n2 - 2);
  return H.is_valid(g.index(i, j)) && H.is_valid(g.index(i + 1, j)) && H.is_valid(g.index(i, j + 1)) &&
         H.is_valid(g.index(i + 1, j + 1));
}

}  // namespace

double ModeTable::mode_energy(std::size_t r, int k) const {
  double e = 0.0;
  for (int comp = 0; comp < 2; ++comp) {
    e += std::norm(c(comp, r, k));
    if (k != 0) e += std::norm(c(comp, r, -k));
  }
  return e;
}

cplx ModeTable::reconstruct(int comp, std::size_t r, double theta) const {
  cplx s = 0.0;
  for (int k = -K; k <= K; ++k) s += c(comp, r, k) * std::polar(1.0, k * theta);
  return s;
}

ModeTable angular_modes(const ComplexField2D& H, cplx center, const std::vector<double>& radii, int K,
                        int center_index) {
  if (K < 0) throw Error(ErrorCode::InvalidParams, "mode count K must be >= 0");
  if (radii.empty()) throw Error(ErrorCode::InvalidParams, "no radii given");
  ModeTable t;
  t.center_index = center_index;
  t.center = center;
  t.K = K;
  t.n_theta = angular_size(K);
  t.radii = radii;
  const int n = t.n_theta;
  const double dth = 2.0 * std::numbers::pi / n;

  fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
  fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  for (int comp = 0; comp < 2; ++comp) {
    for (std::size_t r = 0; r < radii.size(); ++r) {
      if (!(radii[r] > 0.0)) {
        fftw_destroy_plan(plan);
        fftw_free(buf);
        throw Error(ErrorCode::InvalidParams, "radii must be positive");
      }
      std::vector<cplx> samples(static_cast<std::size_t>(n));
      for (int m = 0; m < n; ++m) {
        const cplx z = center + std::polar(radii[r], dth * m);
        if (!circle_usable(H, z)) {
          fftw_destroy_plan(plan);
          fftw_free(buf);
          throw Error(ErrorCode::CircleOutsideGrid, "sampling circle leaves the grid or valid region");
        }
        samples[static_cast<std::size_t>(m)] = *H.interpolate(comp, z);
        buf[m][0] = samples[static_cast<std::size_t>(m)].real();
        buf[m][1] = samples[static_cast<std::size_t>(m)].imag();
      }
      fftw_execute(plan);
      std::vector<cplx> c(static_cast<std::size_t>(2 * K + 1));
      for (int k = -K; k <= K; ++k) {
        const int idx = ((k % n) + n) % n;
        c[static_cast<std::size_t>(k + K)] = cplx(buf[idx][0], buf[idx][1]) / static_cast<double>(n);
      }
      // Re H = sum a_k cos + b_k sin, Im H = sum p_k cos + q_k sin with
      // c_k = ((a_k - i b_k) + i (p_k - i q_k)) / 2 and c_-k the conjugate pairing.
      std::vector<double> h1(static_cast<std::size_t>(K + 1)), h2(h1.size()), rc(h1.size()), is(h1.size());
      for (int k = 0; k <= K; ++k) {
        const cplx cp = c[static_cast<std::size_t>(k + K)];
        const cplx cm = c[static_cast<std::size_t>(-k + K)];
        const cplx re_k = k == 0 ? cplx(cp.real(), 0.0) : cp + std::conj(cm);  // a_k - i b_k
        const cplx im_k = k == 0 ? cplx(cp.imag(), 0.0) : (cp - std::conj(cm)) / cplx(0.0, 1.0);  // p_k - i q_k
        const auto u = static_cast<std::size_t>(k);
        rc[u] = re_k.real();
        h1[u] = -re_k.imag();
        h2[u] = im_k.real();
        is[u] = -im_k.imag();
      }
      t.coeff[comp].push_back(std::move(c));
      t.h1[comp].push_back(std::move(h1));
      t.h2[comp].push_back(std::move(h2));
      t.re_cos[comp].push_back(std::move(rc));
      t.im_sin[comp].push_back(std::move(is));
      t.samples[comp].push_back(std::move(samples));
    }
  }
  fftw_destroy_plan(plan);
  fftw_free(buf);
  return t;
}

double parity_energy(const ModeTable& t, bool odd) {
  double e = 0.0;
  for (std::size_t r = 0; r < t.radii.size(); ++r) {
    for (int k = 0; k <= t.K; ++k) {
      if ((k % 2 == 1) == odd) e += t.mode_energy(r, k);
    }
  }
  return e;
}

}  // namespace glh
