#include <doctest.h>

#include <cmath>
#include <numbers>

#include "glh/errors.hpp"
#include "glh/fourier.hpp"

using namespace glh;

namespace {

// Bilinear in (x1, x2), so grid interpolation is exact and the modes are known:
// Re H = 3 + 2 x1 + x2 + x1 x2 = 3 + 2r cos + r sin + (r²/2) sin 2θ, Im H = x1 - x2/2.
cplx probe_field(cplx z) {
  const double x = z.real(), y = z.imag();
  return {3.0 + 2.0 * x + y + x * y, x - 0.5 * y};
}

ComplexField2D sample(const Grid2D& g, cplx center) {
  ComplexField2D f(g);
  for (std::size_t j = 0; j < g.n2; ++j) {
    for (std::size_t i = 0; i < g.n1; ++i) {
      const cplx z = g.z(i, j) - center;
      f.plus[g.index(i, j)] = probe_field(z);
      f.minus[g.index(i, j)] = std::conj(probe_field(z));
    }
  }
  return f;
}

}  // namespace

TEST_CASE("known modes of a bilinear field") {
  const cplx c0(1.0, -0.5);
  const ComplexField2D f = sample(square_grid(12.0, 0.25), c0);
  const std::vector<double> radii{1.0, 2.5, 7.0};
  const ModeTable t = angular_modes(f, c0, radii, 4);
  CHECK(t.n_theta == 64);
  for (std::size_t r = 0; r < radii.size(); ++r) {
    const double R = radii[r];
    CHECK(t.re_cos[0][r][0] == doctest::Approx(3.0));
    CHECK(t.re_cos[0][r][1] == doctest::Approx(2.0 * R));
    CHECK(t.h1[0][r][1] == doctest::Approx(R));
    CHECK(t.h1[0][r][2] == doctest::Approx(0.5 * R * R));
    CHECK(t.h2[0][r][1] == doctest::Approx(R));
    CHECK(t.im_sin[0][r][1] == doctest::Approx(-0.5 * R));
    CHECK(std::abs(t.h1[0][r][3]) < 1e-12);
    CHECK(std::abs(t.h2[0][r][2]) < 1e-12);
    // The minus component is the conjugate: Im parts flip sign.
    CHECK(t.h2[1][r][1] == doctest::Approx(-R));
    CHECK(t.h1[1][r][1] == doctest::Approx(R));
  }
}

TEST_CASE("FFT coefficients match a direct DFT of the samples") {
  const ComplexField2D f = sample(square_grid(12.0, 0.25), 0.0);
  const ModeTable t = angular_modes(f, 0.0, {4.0}, 8);
  const int n = t.n_theta;
  for (int k = -8; k <= 8; ++k) {
    cplx s = 0.0;
    for (int m = 0; m < n; ++m) s += t.samples[0][0][m] * std::polar(1.0, -2.0 * std::numbers::pi * k * m / n);
    CHECK(std::abs(t.c(0, 0, k) - s / static_cast<double>(n)) < 1e-12);
  }
}

TEST_CASE("truncated series reproduces the samples of a band-limited field") {
  const ComplexField2D f = sample(square_grid(12.0, 0.25), 0.0);
  const ModeTable t = angular_modes(f, 0.0, {3.0}, 4);
  for (int m = 0; m < t.n_theta; m += 5) {
    const double th = 2.0 * std::numbers::pi * m / t.n_theta;
    CHECK(std::abs(t.reconstruct(0, 0, th) - t.samples[0][0][m]) < 1e-12);
  }
}

TEST_CASE("parity energy separates odd and even modes") {
  const ComplexField2D f = sample(square_grid(12.0, 0.25), 0.0);
  const ModeTable t = angular_modes(f, 0.0, {2.0}, 4);
  double total = 0.0;
  for (int k = 0; k <= 4; ++k) total += t.mode_energy(0, k);
  CHECK(parity_energy(t, true) + parity_energy(t, false) == doctest::Approx(total));
  // Odd: k = 1 carries 2r cos + r sin in Re and x1 - x2/2 in Im; even: the constant and sin 2θ.
  CHECK(parity_energy(t, true) > 0.0);
  CHECK(parity_energy(t, false) > 0.0);
}

TEST_CASE("angular grid grows with K") {
  const ComplexField2D f = sample(square_grid(12.0, 0.25), 0.0);
  CHECK(angular_modes(f, 0.0, {2.0}, 16).n_theta == 64);
  CHECK(angular_modes(f, 0.0, {2.0}, 17).n_theta == 128);
}

TEST_CASE("circles leaving the grid or the valid region throw") {
  ComplexField2D f = sample(square_grid(5.0, 0.25), 0.0);
  CHECK_THROWS_AS(angular_modes(f, 0.0, {6.0}, 4), Error);
  f.valid.assign(f.grid.size(), 1);
  f.valid[f.grid.index(f.grid.n1 / 2 + 8, f.grid.n2 / 2)] = 0;
  CHECK_THROWS_AS(angular_modes(f, 0.0, {2.0}, 4), Error);
  CHECK_THROWS_AS(angular_modes(f, 0.0, {}, 4), Error);
}
