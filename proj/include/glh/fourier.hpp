#pragma once

#include <vector>

#include "glh/field.hpp"

namespace glh {

/// Angular Fourier data of both components on circles |z - center| = r.
/// coeff[comp][r][k + K] = (1/n) sum_m H(theta_m) e^{-i k theta_m}, k = -K..K.
/// With H = Re H + i Im H and theta measured from the +x1 axis:
///   h1 = sine coefficient of Re H, h2 = cosine coefficient of Im H,
/// and the remaining parts (cosine of Re H, sine of Im H) are kept separately.
struct ModeTable {
  int center_index = 0;
  cplx center{};
  int K = 0;
  int n_theta = 0;
  std::vector<double> radii;
  std::vector<std::vector<cplx>> coeff[2];
  std::vector<std::vector<double>> h1[2];       // [r][k], k = 0..K
  std::vector<std::vector<double>> h2[2];
  std::vector<std::vector<double>> re_cos[2];
  std::vector<std::vector<double>> im_sin[2];
  std::vector<std::vector<cplx>> samples[2];    // the interpolated circle values

  cplx c(int comp, std::size_t r, int k) const { return coeff[comp][r][static_cast<std::size_t>(k + K)]; }
  /// |c_k|² + |c_-k|² (|c_0|² for k = 0), summed over both components.
  double mode_energy(std::size_t r, int k) const;
  /// Truncated series at angle theta.
  cplx reconstruct(int comp, std::size_t r, double theta) const;
};

/// Bilinear samples on each circle at n_theta = max(64, next power of two >= 4K)
/// equally spaced angles, then a complex FFT per circle and component.
/// Throws CircleOutsideGrid if a circle leaves the grid or touches an invalid node.
ModeTable angular_modes(const ComplexField2D& H, cplx center, const std::vector<double>& radii, int K,
                        int center_index = 0);

/// Summed mode energy over the table for odd (or even) k >= 1 (k = 0 counts as even).
double parity_energy(const ModeTable& t, bool odd);

}  // namespace glh
