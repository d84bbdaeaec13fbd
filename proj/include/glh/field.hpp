#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace glh {

using cplx = std::complex<double>;

/// Uniform Cartesian grid; node (i, j) sits at (x1_min + i h, x2_min + j h).
struct Grid2D {
  double x1_min = 0.0, x1_max = 0.0, x2_min = 0.0, x2_max = 0.0;
  std::size_t n1 = 0, n2 = 0;

  double h() const { return (x1_max - x1_min) / static_cast<double>(n1 - 1); }
  double x1(std::size_t i) const { return x1_min + h() * static_cast<double>(i); }
  double x2(std::size_t j) const { return x2_min + h() * static_cast<double>(j); }
  cplx z(std::size_t i, std::size_t j) const { return {x1(i), x2(j)}; }
  std::size_t size() const { return n1 * n2; }
  std::size_t index(std::size_t i, std::size_t j) const { return j * n1 + i; }
  bool contains(cplx z) const {
    return z.real() >= x1_min && z.real() <= x1_max && z.imag() >= x2_min && z.imag() <= x2_max;
  }
  /// Nearest node index when z lies within `tol * h` of a node.
  std::optional<std::size_t> node_at(cplx z, double tol = 1e-9) const;
};

/// Throws InvalidParams unless both spacings agree within 1e-12.
void validate(const Grid2D& g);

/// Square grid [-half_width, half_width]² with spacing h (half_width rounded to a multiple of h).
Grid2D square_grid(double half_width, double h);

/// Grid with spacing h and a node at the origin covering [x1_lo, x1_hi] x [x2_lo, x2_hi].
Grid2D covering_grid(double x1_lo, double x1_hi, double x2_lo, double x2_hi, double h);

/// Two complex components on a grid, row-major in x1 (index = j * n1 + i).
/// `valid` is empty when every node is valid; otherwise 1 marks a usable node.
struct ComplexField2D {
  Grid2D grid;
  std::vector<cplx> plus;
  std::vector<cplx> minus;
  std::vector<std::uint8_t> valid;

  ComplexField2D() = default;
  explicit ComplexField2D(const Grid2D& g) : grid(g), plus(g.size()), minus(g.size()) {}

  std::vector<cplx>& comp(int c) { return c == 0 ? plus : minus; }
  const std::vector<cplx>& comp(int c) const { return c == 0 ? plus : minus; }
  bool is_valid(std::size_t k) const { return valid.empty() || valid[k] != 0; }

  /// Bilinear interpolation of component c; nullopt outside the grid.
  std::optional<cplx> interpolate(int c, cplx z) const;
};

}  // namespace glh
