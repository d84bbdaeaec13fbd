#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "glh/exec.hpp"
#include "glh/field.hpp"
#include "glh/params.hpp"
#include "glh/profile.hpp"

namespace glh {

using PointField = std::function<std::array<cplx, 2>(cplx)>;

/// Samples a pointwise two-component evaluator on every grid node.
ComplexField2D sample_field(const Grid2D& grid, const PointField& f, Exec exec = Exec::Parallel);

/// L0(phi) = Lap phi + [A(t² - W²) + B(t'² - W'²)] phi - 2A Re(w conj phi) w - 2B Re(w' conj phi') w,
/// linearized about the standard vortex centred at `center`. Boundary ring invalid.
ComplexField2D apply_L0(const ComplexField2D& phi, const ProfilePair& profile, cplx center = 0.0,
                        Exec exec = Exec::Parallel);

/// Exact d w / d x_dir (dir = 1 or 2) of the standard vortex at the origin.
class TranslationMode {
 public:
  TranslationMode(const ProfilePair& profile, int direction) : profile_(&profile), dir_(direction) {}
  std::array<cplx, 2> operator()(cplx z) const;

 private:
  const ProfilePair* profile_;
  int dir_;
};

/// Seeded smooth complex field decaying like 1/r (control for the kernel check).
PointField random_smooth_field(std::uint64_t seed);

struct KernelResidualRow {
  double h = 0.0;
  double sup_plus = 0.0;
  double sup_minus = 0.0;
  double sup() const { return std::max(sup_plus, sup_minus); }
};

struct KernelResidualReport {
  std::vector<KernelResidualRow> rows;
  double order = 0.0;  // least-squares slope of log sup vs log h
};

/// Sup over interior nodes of |L0(phi)| on square grids of the given spacings.
KernelResidualReport kernel_residual(const ProfilePair& profile, const std::vector<double>& hs,
                                     const PointField& phi, double half_width = 20.0);

/// Same, with phi the x1 translation mode.
KernelResidualReport kernel_residual(const ProfilePair& profile, const std::vector<double>& hs,
                                     double half_width = 20.0);

double fitted_order(const std::vector<double>& hs, const std::vector<double>& values);

namespace detail {
void l0_serial(const ComplexField2D& phi, const ProfilePair& profile, cplx center, ComplexField2D& out);
void l0_parallel(const ComplexField2D& phi, const ProfilePair& profile, cplx center, ComplexField2D& out);
}  // namespace detail

}  // namespace glh
