#include <doctest.h>

#include <cmath>

#include "glh/errors.hpp"
#include "glh/profile.hpp"
#include "oracles/scalar_gl.hpp"
#include "support.hpp"

using namespace glh;

TEST_CASE("geometric grid ends exactly at L and keeps the ratio bound") {
  const RadialGrid g = make_geometric_grid(1e-3, 1.0025, 60.0);
  CHECK(g.nodes.front() == 1e-3);
  CHECK(g.nodes.back() == 60.0);
  CHECK(g.ratio <= 1.0025);
  for (std::size_t i = 1; i < g.nodes.size(); ++i) REQUIRE(g.nodes[i] > g.nodes[i - 1]);
}

TEST_CASE("invalid inputs are rejected") {
  GLParams p;
  p.b = -1.5;  // b² >= a+ a-
  CHECK_THROWS_AS(validate(p), Error);
  GLParams q;
  q.t_plus = 0.9;  // t+² + t-² != 1
  CHECK_THROWS_AS(validate(q), Error);
  RadialGrid tiny{{0.1, 0.2, 0.3, 0.4, 0.5}, 0.5, 0.0};
  CHECK_THROWS_AS(validate(tiny), Error);
}

TEST_CASE("far-field constants match the 1/l² balance") {
  const GLParams p;
  const auto c = support::far_field_c(p);
  const auto [cp, cm] = asymptotic_c(p);
  CHECK(cp == doctest::Approx(c[0]).epsilon(1e-12));
  CHECK(cm == doctest::Approx(c[1]).epsilon(1e-12));
  CHECK(cp == doctest::Approx(2.0203).epsilon(1e-4));

  GLParams a;
  a.a_plus = 1.3;
  a.a_minus = 0.8;
  a.b = -0.2;
  a.t_plus = 0.6;
  a.t_minus = 0.8;
  const auto ca = support::far_field_c(a);
  const auto [ap, am] = asymptotic_c(a);
  CHECK(ap == doctest::Approx(ca[0]).epsilon(1e-12));
  CHECK(am == doctest::Approx(ca[1]).epsilon(1e-12));
}

TEST_CASE("tail fit recovers the far-field constants within 2%") {
  const ProfilePair& pr = support::default_profile();
  const TailFit fit = tail_fit(pr, 35.0, 60.0);
  const auto c = support::far_field_c(pr.params);
  for (int k = 0; k < 2; ++k) {
    CHECK(std::abs(fit.c_value[k] - c[k]) / c[k] < 0.02);
    CHECK(std::abs(fit.c_deriv[k] - c[k]) / c[k] < 0.02);
  }
  CHECK(fit.nodes_used > 10);
}

TEST_CASE("Newton converges to the requested residual") {
  const ProfilePair& pr = support::default_profile();
  CHECK(pr.residual <= 1e-10);
  CHECK(profile_residual(pr) <= 1e-10);
  CHECK(pr.iterations >= 1);
}

TEST_CASE("decoupled system reduces to the rescaled scalar profile") {
  GLParams p;
  p.b = 0.0;
  const ProfilePair pr = support::solve(p);
  const oracle::ScalarGLProfile U(0.002, 60.0);
  double err = 0.0;
  for (int c = 0; c < 2; ++c) {
    const double lam = p.t(c) * std::sqrt(p.a(c));
    for (std::size_t i = 0; i < pr.size(); ++i) {
      const double l = pr.grid.nodes[i];
      if (lam * l > 59.0) continue;
      err = std::max(err, std::abs(pr.w[c][i] - p.t(c) * U(lam * l)));
    }
  }
  CHECK(err < 1e-6);
}

TEST_CASE("bounds and monotonicity hold for attractive coupling") {
  for (double b : {-0.1, -0.3, -0.6, -0.9}) {
    GLParams p;
    p.b = b;
    const ProfilePair pr = support::solve(p);
    const ProfileValidation v = validate_profile(pr);
    CHECK(v.monotonicity_checked);
    CHECK(v.bound_violations.empty());
    CHECK(v.monotonicity_violations.empty());
    CHECK(v.ok());
  }
  GLParams a;
  a.a_plus = 1.3;
  a.a_minus = 0.8;
  a.b = -0.2;
  a.t_plus = 0.6;
  a.t_minus = 0.8;
  CHECK(validate_profile(support::solve(a)).ok());
}

TEST_CASE("symmetric parameters give identical components") {
  const ProfilePair& pr = support::default_profile();
  for (std::size_t i = 0; i < pr.size(); ++i) REQUIRE(pr.w[0][i] == doctest::Approx(pr.w[1][i]).epsilon(1e-12));
}

TEST_CASE("core behaviour is linear in l") {
  const ProfileValidation v = validate_profile(support::default_profile());
  for (int c = 0; c < 2; ++c) {
    CHECK(v.slope[c] > 0.0);
    CHECK(v.slope_deviation[c] < 1e-3);
  }
}

TEST_CASE("evaluation is continuous across the series, grid and tail pieces") {
  const ProfilePair& pr = support::default_profile();
  const double l0 = pr.grid.nodes.front(), L = pr.grid.L;
  for (int c = 0; c < 2; ++c) {
    const RadialSample a = pr.eval(c, l0 * (1 - 1e-9)), b = pr.eval(c, l0 * (1 + 1e-9));
    CHECK(a.w == doctest::Approx(b.w).epsilon(1e-6));
    CHECK(a.dw == doctest::Approx(b.dw).epsilon(1e-4));
    const RadialSample s = pr.eval(c, L * (1 - 1e-12)), t = pr.eval(c, L * (1 + 1e-12));
    CHECK(std::abs(s.w - t.w) < 1e-8);
    CHECK(std::abs(s.dw - t.dw) < 1e-6);  // the Dirichlet data at L omits O(L^-4) terms
    CHECK(pr.eval(c, 0.0).w == 0.0);
    CHECK(pr.eval(c, 1e6).w == doctest::Approx(pr.params.t(c)).epsilon(1e-10));
  }
}

TEST_CASE("interpolated derivatives agree with finite differences of the interpolant") {
  const ProfilePair& pr = support::default_profile();
  for (double l : {0.05, 0.7, 2.3, 9.1, 31.0}) {
    const double d = 1e-5 * l;
    const double fd1 = (pr.eval(0, l + d).w - pr.eval(0, l - d).w) / (2 * d);
    const double fd2 = (pr.eval(0, l + d).dw - pr.eval(0, l - d).dw) / (2 * d);
    CHECK(pr.eval(0, l).dw == doctest::Approx(fd1).epsilon(1e-6));
    CHECK(pr.eval(0, l).d2w == doctest::Approx(fd2).epsilon(1e-4).scale(1e-6));
  }
}

TEST_CASE("degree pair (1,1) tail constants reduce to the closed form") {
  const GLParams p;
  const auto [a, b] = tail_constants(p, {1, 1});
  const auto [c, d] = asymptotic_c(p);
  CHECK(a == doctest::Approx(c));
  CHECK(b == doctest::Approx(d));
}
