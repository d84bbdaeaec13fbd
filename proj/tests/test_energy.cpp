#include <doctest.h>

#include <cmath>
#include <numbers>

#include "glh/energy.hpp"
#include "glh/errors.hpp"

using namespace glh;

TEST_CASE("pair constant equals k log k") {
  // prod_{m=1}^{k-1} 2 sin(pi m / k) = k, and each ordered pair appears once per row.
  for (int k = 2; k <= 8; ++k) CHECK(pair_constant(k) == doctest::Approx(k * std::log(k)).epsilon(1e-12));
}

TEST_CASE("energy closed form") {
  FilamentConfig c;
  c.k = 3;
  c.radius_scaled = 1.2;
  c.epsilon = 1e-3;
  const double le = std::log(1e3), rho = 1.2 / std::sqrt(le);
  const double expect =
      2.0 * std::numbers::pi * std::numbers::pi * (le * 1.5 * rho * rho - 6.0 * std::log(rho) - 3.0 * std::log(3.0));
  CHECK(interaction_energy(c) == doctest::Approx(expect).epsilon(1e-13));
  c.k = 4;
  c.central_degree = -1;
  const double plain = 2.0 * std::numbers::pi * std::numbers::pi *
                       (le * 2.0 * rho * rho - 12.0 * std::log(rho) - 4.0 * std::log(4.0));
  CHECK(interaction_energy(c) ==
        doctest::Approx(plain + 2.0 * std::numbers::pi * std::numbers::pi * 8.0 * std::log(rho)).epsilon(1e-13));
}

TEST_CASE("equilibrium radii land on the closed forms") {
  for (double eps : {1e-2, 1e-3, 1e-6}) {
    const double sl = std::sqrt(std::abs(std::log(eps)));
    for (int k : {2, 3, 4, 6}) CHECK(std::abs(equilibrium_radius(k, eps, 0) * sl - std::sqrt(k - 1.0)) < 1e-6);
    for (int k : {4, 5, 7}) CHECK(std::abs(equilibrium_radius(k, eps, -1) * sl - std::sqrt(k - 3.0)) < 1e-6);
  }
}

TEST_CASE("scaled radius is unchanged by eps -> eps²") {
  for (int k : {2, 3, 5}) {
    const double a = equilibrium_radius(k, 1e-2, 0) * std::sqrt(std::log(1e2));
    const double b = equilibrium_radius(k, 1e-4, 0) * std::sqrt(std::log(1e4));
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
  }
}

TEST_CASE("energy is strictly convex at the minimizer") {
  for (int k : {2, 3, 4}) {
    FilamentConfig c;
    c.k = k;
    c.epsilon = 1e-3;
    c.radius_scaled = equilibrium_radius(k, c.epsilon) * std::sqrt(c.log_eps());
    CHECK(energy_second_derivative(c) > 1e-6 * c.log_eps());
  }
}

TEST_CASE("no interior minimum without interactions") {
  CHECK_THROWS_AS(equilibrium_radius(1, 1e-3, 0), Error);
  try {
    equilibrium_radius(1, 1e-3, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInteriorMinimum);
  }
  CHECK_THROWS_AS(equilibrium_radius(3, 1e-3, -1), Error);
}

TEST_CASE("polygon gradient matches finite differences of the energy") {
  const std::vector<cplx> q{{1.1, 0.2}, {-0.7, 0.9}, {-0.3, -1.2}, {0.8, -0.6}};
  for (int central : {0, -1}) {
    const auto g = polygon_gradient(q, central);
    const double d = 1e-6;
    for (std::size_t l = 0; l < q.size(); ++l) {
      auto qp = q, qm = q;
      qp[l] += d;
      qm[l] -= d;
      const double gx = (polygon_energy(qp, central) - polygon_energy(qm, central)) / (2 * d);
      qp = q;
      qm = q;
      qp[l] += cplx(0, d);
      qm[l] -= cplx(0, d);
      const double gy = (polygon_energy(qp, central) - polygon_energy(qm, central)) / (2 * d);
      CHECK(g[l].real() == doctest::Approx(gx).epsilon(1e-6));
      CHECK(g[l].imag() == doctest::Approx(gy).epsilon(1e-6));
    }
  }
}

TEST_CASE("unperturbed polygon is a fixed point") {
  const RelaxResult r = relax_polygon(3, 1e-3, 0, std::vector<cplx>(3));
  CHECK(r.gradient_norm < 1e-10);
  CHECK(r.alignment_error < 1e-8);
}

TEST_CASE("perturbed triangle relaxes back to the rho* polygon") {
  const std::vector<cplx> pert{{0.05, 0.0}, {-0.03, 0.05}, {0.0, -0.05}};
  const RelaxResult r = relax_polygon(3, 1e-3, 0, pert);
  CHECK(r.gradient_norm < 1e-10);
  CHECK(r.mean_radius_scaled == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(r.alignment_error < 1e-4);
  CHECK(r.trajectory.size() >= 2);
}

TEST_CASE("central configuration: stable under dilation, unstable in general position") {
  // A uniform 5% dilation keeps the k-fold symmetry and relaxes back.
  std::vector<cplx> dil;
  for (int l = 0; l < 4; ++l) dil.push_back(0.05 * std::polar(1.0, std::numbers::pi * l / 2.0));
  const RelaxResult r = relax_polygon(4, 1e-3, -1, dil);
  CHECK(r.mean_radius_scaled == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.alignment_error < 1e-4);
  // Moving one vortex alone lets the central anti-vortex pull it in: the
  // polygon is a saddle of the general-position energy.
  RelaxOptions opt;
  opt.max_iterations = 20000;
  const RelaxResult s = relax_polygon(4, 1e-3, -1, {{0.01, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}, opt);
  CHECK(s.alignment_error > 0.1);
}

TEST_CASE("relabelled antipodal start gives the rotated configuration") {
  const cplx d1(0.05, 0.02), d2(-0.01, 0.04);
  const RelaxResult a = relax_polygon(2, 1e-3, 0, {d1, d2});
  const RelaxResult b = relax_polygon(2, 1e-3, 0, {-d2, -d1});
  CHECK(std::abs(b.final_positions[0] + a.final_positions[1]) < 1e-12);
  CHECK(std::abs(b.final_positions[1] + a.final_positions[0]) < 1e-12);
}

TEST_CASE("perturbations beyond 10% are rejected") {
  CHECK_THROWS_AS(relax_polygon(2, 1e-3, 0, {{0.2, 0.0}, {0.0, 0.0}}), Error);
  CHECK_THROWS_AS(relax_polygon(2, 1e-3, 0, {{0.0, 0.0}}), Error);
}
