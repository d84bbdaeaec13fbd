#pragma once

#include <array>
#include <vector>

#include "glh/exec.hpp"
#include "glh/field.hpp"
#include "glh/profile.hpp"

namespace glh {

/// Helical vortex configuration in the rescaled 2D plane.
struct VortexConfig {
  double epsilon = 1e-2;
  int k = 2;
  double d_hat = 1.0;
  bool central_antivortex = false;
  bool conjugate_minus = false;

  double log_eps() const;  // |ln eps|
  double d_tilde() const;  // d_hat / (eps sqrt|ln eps|)
  std::vector<cplx> centers() const;
};

void validate(const VortexConfig& c);

/// Value, gradient and Hessian of a complex function at one point.
struct Jet {
  cplx v{}, d1{}, d2{}, d11{}, d12{}, d22{};

  cplx laplacian() const { return d11 + d22; }
};

/// Product rule for jets.
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(cplx s, const Jet& a);

/// W(|z-c|) exp(i sigma arg(z-c)) for component `comp`; zero at the center.
cplx vortex_value(const ProfilePair& profile, int comp, cplx center, int sigma, cplx z);

/// Exact jet of one vortex factor built from W, W', W'' of the interpolated profile.
/// Throws PointAtVortexCenter when |z-c| is below the first profile node.
Jet vortex_jet(const ProfilePair& profile, int comp, cplx center, int sigma, cplx z);

/// Evaluator for a single vortex: (W+ e^{i s theta}, W- e^{i s theta}).
class SingleVortex {
 public:
  SingleVortex(const ProfilePair& profile, cplx center, int sign)
      : profile_(&profile), center_(center), sign_(sign) {}
  std::array<cplx, 2> operator()(cplx z) const {
    return {vortex_value(*profile_, 0, center_, sign_, z), vortex_value(*profile_, 1, center_, sign_, z)};
  }

 private:
  const ProfilePair* profile_;
  cplx center_;
  int sign_;
};

/// Pointwise evaluator of the normalized product ansatz v_d.
class AnsatzEvaluator {
 public:
  AnsatzEvaluator(const ProfilePair& profile, const VortexConfig& config);

  cplx value(int comp, cplx z) const;
  std::array<cplx, 2> operator()(cplx z) const { return {value(0, z), value(1, z)}; }
  /// Jet of v_d by the product rule over all factors.
  Jet jet(int comp, cplx z) const;

  const std::vector<cplx>& centers() const { return centers_; }
  const VortexConfig& config() const { return config_; }
  const ProfilePair& profile() const { return *profile_; }
  int sigma(int comp) const { return comp == 1 && config_.conjugate_minus ? -1 : 1; }
  double prefactor(int comp) const { return prefactor_[comp]; }

 private:
  const ProfilePair* profile_;
  VortexConfig config_;
  std::vector<cplx> centers_;
  std::array<double, 2> prefactor_{};
};

ComplexField2D build_ansatz(const ProfilePair& profile, const VortexConfig& config, const Grid2D& grid,
                            Exec exec = Exec::Parallel);

/// Sup over boundary nodes of | |v+|² + |v-|² - 1 |.
double modulus_limit_check(const ComplexField2D& field);

/// Summed phase increments of component `comp` around a circle, divided by 2 pi.
double winding_number(const ComplexField2D& field, int comp, cplx center, double radius, int samples = 720);

/// Nodes where |component| < threshold.
std::vector<cplx> small_modulus_nodes(const ComplexField2D& field, int comp, double threshold);

}  // namespace glh
