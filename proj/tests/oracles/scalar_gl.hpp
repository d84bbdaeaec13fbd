#pragma once

// Independent reference for the classical single-component vortex profile
//   U'' + U'/r - U/r² + (1 - U²) U = 0,  U(0) = 0,  U(inf) = 1.
// Uniform grid in r, Dirichlet data at both ends, Newton with a tridiagonal
// (Thomas) solve, Richardson extrapolation from h and h/2.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracle {

class ScalarGLProfile {
 public:
  ScalarGLProfile(double h, double R) : h_(h) {
    const auto coarse = solve(h, R);
    const auto fine = solve(0.5 * h, R);
    u_.resize(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) u_[i] = (4.0 * fine[2 * i] - coarse[i]) / 3.0;
  }

  /// Four-point Lagrange interpolation of the extrapolated values.
  double operator()(double r) const {
    const double x = r / h_;
    auto i = static_cast<long>(std::floor(x)) - 1;
    i = std::clamp<long>(i, 0, static_cast<long>(u_.size()) - 4);
    double sum = 0.0;
    for (int a = 0; a < 4; ++a) {
      double basis = 1.0;
      for (int b = 0; b < 4; ++b) {
        if (b != a) basis *= (x - static_cast<double>(i + b)) / static_cast<double>(a - b);
      }
      sum += basis * u_[static_cast<std::size_t>(i + a)];
    }
    return sum;
  }

  double radius() const { return h_ * static_cast<double>(u_.size() - 1); }

 private:
  static std::vector<double> solve(double h, double R) {
    const auto m = static_cast<std::size_t>(std::llround(R / h));
    std::vector<double> u(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      const double r = h * static_cast<double>(i);
      u[i] = r / std::sqrt(1.0 + r * r);
    }
    u[0] = 0.0;
    u[m] = 1.0 - 1.0 / (2.0 * R * R) - 9.0 / (8.0 * R * R * R * R);
    std::vector<double> lo(m + 1), di(m + 1), up(m + 1), rhs(m + 1);
    for (int it = 0; it < 60; ++it) {
      for (std::size_t i = 1; i < m; ++i) {
        const double r = h * static_cast<double>(i);
        const double f = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h) + (u[i + 1] - u[i - 1]) / (2.0 * h * r) -
                         u[i] / (r * r) + (1.0 - u[i] * u[i]) * u[i];
        lo[i] = 1.0 / (h * h) - 1.0 / (2.0 * h * r);
        up[i] = 1.0 / (h * h) + 1.0 / (2.0 * h * r);
        di[i] = -2.0 / (h * h) - 1.0 / (r * r) + 1.0 - 3.0 * u[i] * u[i];
        rhs[i] = -f;
      }
      // Thomas sweep on rows 1..m-1 with zero corrections at the ends.
      for (std::size_t i = 2; i < m; ++i) {
        const double w = lo[i] / di[i - 1];
        di[i] -= w * up[i - 1];
        rhs[i] -= w * rhs[i - 1];
      }
      std::vector<double> du(m + 1, 0.0);
      du[m - 1] = rhs[m - 1] / di[m - 1];
      for (std::size_t i = m - 2; i >= 1; --i) du[i] = (rhs[i] - up[i] * du[i + 1]) / di[i];
      double step = 0.0;
      for (std::size_t i = 1; i < m; ++i) {
        u[i] += du[i];
        step = std::max(step, std::abs(du[i]));
      }
      if (step < 1e-14) return u;
    }
    throw std::runtime_error("scalar GL oracle did not converge");
  }

  double h_;
  std::vector<double> u_;
};

}  // namespace oracle
