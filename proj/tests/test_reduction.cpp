#include <doctest.h>

#include <cmath>
#include <numbers>

#include "glh/errors.hpp"
#include "glh/reduction.hpp"
#include "support.hpp"

using namespace glh;

namespace {

ReductionIntegrals at(double eps, double d_hat, double alpha0 = 0.5) {
  VortexConfig c;
  c.epsilon = eps;
  c.d_hat = d_hat;
  QuadratureSpec q;
  q.alpha0 = alpha0;
  return reduction_integrals(support::default_profile(), c, q);
}

// pi eps sqrt|ln eps| times t+² + t-² = 1.
double leading_scale(double eps) { return std::numbers::pi * eps * std::sqrt(std::abs(std::log(eps))); }

}  // namespace

TEST_CASE("leading constants at eps = 1e-3, d^ = 1") {
  const ReductionIntegrals r = at(1e-3, 1.0);
  const double sc = leading_scale(1e-3);
  CHECK(r.T1 / sc >= 0.8);
  CHECK(r.T1 / sc <= 1.2);
  CHECK(r.T0 / sc >= -1.2);
  CHECK(r.T0 / sc <= -0.8);
  CHECK(r.r_eps == doctest::Approx(0.5 / (1e-3 * std::sqrt(std::log(1e3)))));
}

TEST_CASE("doubling d^ doubles T1 and halves T0") {
  const ReductionIntegrals a = at(1e-3, 1.0), b = at(1e-3, 2.0);
  CHECK(b.T1 / a.T1 == doctest::Approx(2.0).epsilon(0.15));
  CHECK(b.T0 / a.T0 == doctest::Approx(0.5).epsilon(0.15));
}

TEST_CASE("T0 + T1 increases with d^") {
  double prev = -1e300;
  for (double d : {0.3, 0.6, 1.0, 1.5, 2.2, 3.0}) {
    const ReductionIntegrals r = at(1e-3, d);
    CHECK(r.T0 + r.T1 > prev);
    prev = r.T0 + r.T1;
  }
}

TEST_CASE("quadrature is deterministic") {
  const ReductionIntegrals a = at(1e-2, 1.1), b = at(1e-2, 1.1);
  CHECK(a.T0 == b.T0);
  CHECK(a.T1 == b.T1);
}

TEST_CASE("root of T0 + T1 lies near 1") {
  const DhatResult r = solve_dhat(support::default_profile(), 1e-3);
  CHECK(r.d_hat > 0.7);
  CHECK(r.d_hat < 1.3);
  CHECK(std::abs(r.T0 + r.T1) < 1e-3 * std::abs(r.T0));
  CHECK(r.iterations > 5);
}

TEST_CASE("smaller cut radius moves the root but keeps its sign structure") {
  QuadratureSpec q;
  q.alpha0 = 0.25;
  const DhatResult a = solve_dhat(support::default_profile(), 1e-3, q);
  const DhatResult b = solve_dhat(support::default_profile(), 1e-3);
  CHECK(a.d_hat > 0.7);
  CHECK(a.d_hat < 1.5);
  CHECK(a.d_hat != b.d_hat);
}

TEST_CASE("reduction errors") {
  VortexConfig c;
  c.epsilon = 1e-2;
  QuadratureSpec q;
  q.n_theta = 32;
  CHECK_THROWS_AS(reduction_integrals(support::default_profile(), c, q), Error);
  VortexConfig k3 = c;
  k3.k = 3;
  CHECK_THROWS_AS(reduction_integrals(support::default_profile(), k3), Error);
  try {
    solve_dhat(support::default_profile(), 1e-2, {}, 2.0, 3.0);
    FAIL("expected NoSignChange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSignChange);
  }
}
