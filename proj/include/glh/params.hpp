#pragma once

#include <cmath>
#include <utility>

namespace glh {

/// Constants of the coupled two-component Ginzburg-Landau system.
struct GLParams {
  double a_plus = 1.0;
  double a_minus = 1.0;
  double b = -0.3;
  double t_plus = 1.0 / std::sqrt(2.0);
  double t_minus = 1.0 / std::sqrt(2.0);

  double a(int comp) const { return comp == 0 ? a_plus : a_minus; }
  double t(int comp) const { return comp == 0 ? t_plus : t_minus; }

  /// True when the attractive-coupling condition b < 0 holds.
  bool negative_coupling() const { return b < 0.0; }
};

/// Throws InvalidParams unless a± > 0, b² < a+ a-, t± > 0 and t+² + t-² = 1.
void validate(const GLParams& p);

/// Far-field constants c± of W± ~ t± - c±/(2 l²).
std::pair<double, double> asymptotic_c(const GLParams& p);

}  // namespace glh
