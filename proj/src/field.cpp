#include "glh/field.hpp"

#include <cmath>

#include "glh/errors.hpp"

namespace glh {

std::optional<std::size_t> Grid2D::node_at(cplx z, double tol) const {
  const double h_ = h();
  const double fi = (z.real() - x1_min) / h_;
  const double fj = (z.imag() - x2_min) / h_;
  const double ri = std::round(fi), rj = std::round(fj);
  if (std::abs(fi - ri) > tol || std::abs(fj - rj) > tol) return std::nullopt;
  if (ri < 0 || rj < 0 || ri > static_cast<double>(n1 - 1) || rj > static_cast<double>(n2 - 1)) {
    return std::nullopt;
  }
  return index(static_cast<std::size_t>(ri), static_cast<std::size_t>(rj));
}

void validate(const Grid2D& g) {
  if (g.n1 < 3 || g.n2 < 3) throw Error(ErrorCode::InvalidParams, "grid needs at least 3 nodes per axis");
  const double h1 = (g.x1_max - g.x1_min) / static_cast<double>(g.n1 - 1);
  const double h2 = (g.x2_max - g.x2_min) / static_cast<double>(g.n2 - 1);
  if (!(h1 > 0.0) || std::abs(h1 - h2) > 1e-12 * std::max(1.0, h1)) {
    throw Error(ErrorCode::InvalidParams, "grid spacings in x1 and x2 must agree");
  }
}

Grid2D square_grid(double half_width, double h) {
  return covering_grid(-half_width, half_width, -half_width, half_width, h);
}

Grid2D covering_grid(double x1_lo, double x1_hi, double x2_lo, double x2_hi, double h) {
  auto lo = [h](double x) { return std::floor(x / h + 1e-9); };
  auto hi = [h](double x) { return std::ceil(x / h - 1e-9); };
  const double i0 = lo(x1_lo), i1 = hi(x1_hi), j0 = lo(x2_lo), j1 = hi(x2_hi);
  Grid2D g;
  g.x1_min = i0 * h;
  g.x2_min = j0 * h;
  g.n1 = static_cast<std::size_t>(i1 - i0) + 1;
  g.n2 = static_cast<std::size_t>(j1 - j0) + 1;
  // Define the upper bounds so that h() reproduces h exactly in x1 and x2.
  g.x1_max = g.x1_min + h * static_cast<double>(g.n1 - 1);
  g.x2_max = g.x2_min + h * static_cast<double>(g.n2 - 1);
  validate(g);
  return g;
}

std::optional<cplx> ComplexField2D::interpolate(int c, cplx z) const {
  if (!grid.contains(z)) return std::nullopt;
  const double h = grid.h();
  const double fi = (z.real() - grid.x1_min) / h;
  const double fj = (z.imag() - grid.x2_min) / h;
  auto i = static_cast<std::size_t>(std::floor(fi));
  auto j = static_cast<std::size_t>(std::floor(fj));
  if (i >= grid.n1 - 1) i = grid.n1 - 2;
  if (j >= grid.n2 - 1) j = grid.n2 - 2;
  const double u = fi - static_cast<double>(i), v = fj - static_cast<double>(j);
  const auto& f = comp(c);
  const std::size_t k = grid.index(i, j);
  return (1 - u) * (1 - v) * f[k] + u * (1 - v) * f[k + 1] + (1 - u) * v * f[k + grid.n1] +
         u * v * f[k + grid.n1 + 1];
}

}  // namespace glh
