#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glh/ansatz.hpp"
#include "glh/field.hpp"

namespace glh {

/// Weights and regions of the error norms. r_eps = alpha0 / (eps sqrt|ln eps|).
struct NormParams {
  double alpha = 0.3;
  double sigma = 0.5;
  double alpha0 = 0.5;
  double r_eps = 0.0;
  /// Outer bound of the weighted Hölder pieces, in units of r_eps.
  double region_factor = 2.0;
  /// Hölder proxy sampling: ball centres per piece and node pairs per ball.
  int holder_centers = 256;
  int holder_pairs = 256;
  std::uint64_t seed = 20240611;
};

/// Fills r_eps from the configuration and checks r_eps <= d~/2.
NormParams make_norm_params(const VortexConfig& config, double alpha0 = 0.5, double alpha = 0.3,
                            double sigma = 0.5);

void validate(const NormParams& p, const VortexConfig& config);

/// Smooth cutoff: 1 on [0,1], 0 on [2,inf), C² quintic bridge in between.
double eta1(double s);

struct NormPiece {
  std::string piece;      // core_sup, core_holder, far_re, far_im, holder_re, holder_im, ...
  std::string component;  // plus or minus
  std::string region;     // human-readable region bound
  double value = 0.0;
};

struct NormReport {
  std::vector<NormPiece> pieces;
  double total() const;
  /// Sum of the pieces with the given name over both components.
  double piece_total(const std::string& name) const;
};

/// ||H||_** with Hölder seminorms replaced by sampled difference quotients.
/// Sup pieces run over valid grid nodes. Throws RegionEmpty when no valid node
/// has all l_j > 2.
NormReport norm_starstar(const ComplexField2D& H, const ComplexField2D& v_d, const VortexConfig& config,
                         const NormParams& normp);

/// |H|_## pieces (core C^alpha on l_j < 4 plus the 1/l weighted sups over
/// l_j > 2, min l_j < r_eps).
NormReport sharpsharp_report(const ComplexField2D& H, const ComplexField2D& v_d, const VortexConfig& config,
                             const NormParams& normp);
double seminorm_sharpsharp(const ComplexField2D& H, const ComplexField2D& v_d, const VortexConfig& config,
                           const NormParams& normp);

/// Reflection through the vertical line x1 = Re(e_j): 2 e_j - x1 + i x2.
cplx reflect(cplx z, cplx e_j);

struct OddEvenSplit {
  ComplexField2D odd;
  ComplexField2D even;
};

/// H_o = sum_j eta_j H_{o,j}, H_{o,j}(z) = (H(z) + conj H(R_j z)) / 2, H_e = H - H_o,
/// with eta_j(z) = eta1(|z - e_j| / r_eps). Reflected values are read node to
/// node when the grid is symmetric about e_j and bilinearly otherwise.
OddEvenSplit odd_even_split(const ComplexField2D& H, const VortexConfig& config, const NormParams& normp);

/// Far-field limit of R for the k = 2 pair (profiles replaced by t):
/// 2i cos(th1 - th2)/(l1 l2) + eps² d_ss Theta + i eps² (d_s Theta - 2)².
cplx R_far(cplx z, const VortexConfig& config);

struct AlphaBetaSplit {
  ComplexField2D alpha;
  ComplexField2D beta;
};

/// R_o^alpha = sum_j eta_j (R_far(z) + conj R_far(R_j z)) / 2 evaluated in closed
/// form on the nodes of R_o; R_o^beta = R_o - R_o^alpha. k = 2 only.
AlphaBetaSplit split_R_alpha_beta(const ComplexField2D& R_o, const VortexConfig& config, const NormParams& normp);

}  // namespace glh
