#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vnweyl/observables.hpp"
#include "vnweyl/reference.hpp"

using namespace vnweyl;

TEST_CASE("closed-form mode coefficients match quadrature") {
  auto quad = gauss_hermite(80);
  const double xc = 1.3, x = 0.4;
  for (double p : {0.0, -2.0, 3.7}) {
    auto phi_max = 12;
    for (int k = 0; k <= phi_max; ++k) {
      cplx s(0.0);
      for (int q = 0; q < quad.order(); ++q) {
        double y = quad.nodes[q];
        cplx r = std::exp(cplx(-0.5 * (x - xc) * (x - xc) - 0.5 * y * y, -p * y)) /
                 std::sqrt(2.0 * std::acos(-1.0));
        s += quad.lifted_weights[q] * r * hermite_values(phi_max, y)[k];
      }
      cplx closed = coherent_gaussian_mode(k, x, xc, p);
      CHECK(std::abs(closed - s) < 1e-12);
    }
  }
}

TEST_CASE("exact field endpoints of the period") {
  Grid1D grid(-8.0, 8.0, 40);
  const int N = 16;
  auto quad = gauss_hermite(2 * (N + 1));
  auto f0 = harmonic_exact_field(0.0, grid, N, quad, 5.0);
  auto init = project(InitialState::gaussian(5.0, 1.0, 0.0), grid, N, quad);
  for (size_t i = 0; i < f0.data.size(); ++i) CHECK(std::abs(f0.data[i] - init.data[i]) < 1e-12);

  auto f2pi = harmonic_exact_field(2.0 * std::numbers::pi, grid, N, quad, 5.0);
  for (size_t i = 0; i < f0.data.size(); ++i) CHECK(std::abs(f2pi.data[i] - f0.data[i]) < 1e-12);
}

TEST_CASE("half period moves the packet to the mirror point") {
  Grid1D grid(-8.0, 8.0, 100);
  const int N = 16;
  auto quad = gauss_hermite(2 * (N + 1));
  auto f = harmonic_exact_field(std::numbers::pi, grid, N, quad, 5.0);
  auto m = macro_densities(f, grid);
  int jp = 0;
  for (int j = 0; j < grid.nx; ++j)
    if (m.rho[j] > m.rho[jp]) jp = j;
  CHECK(grid.center(jp) == doctest::Approx(-5.0).epsilon(0.05));
}

TEST_CASE("exact field keeps parity and trace") {
  Grid1D grid(-8.0, 8.0, 200);
  const int N = 24;
  auto quad = gauss_hermite(2 * (N + 1));
  for (double t : {0.3, 1.9, 4.4}) {
    auto f = harmonic_exact_field(t, grid, N, quad, 1.0, 0.5);
    CHECK(trace(f, grid) == doctest::Approx(1.0).epsilon(1e-10));
    for (int k = 0; k <= N; ++k)
      for (int j = 0; j < grid.nx; j += 13) {
        cplx expect = (k % 2 == 0) ? std::conj(f.at(k, j)) : -std::conj(f.at(k, j));
        CHECK(std::abs(f.at(k, j) - expect) < 1e-12);
      }
  }
}

TEST_CASE("error tracker") {
  Grid1D grid(0.0, 1.0, 10);
  HermiteField a(2, 10), b(2, 10);
  ErrorTracker tracker;
  tracker.record(a, b, grid);
  CHECK(tracker.max_error() == 0.0);
  b.at(1, 3) = cplx(0.0, 0.25);
  tracker.record(a, b, grid);
  CHECK(tracker.max_error() == doctest::Approx(std::sqrt(0.1) * 0.25).epsilon(1e-14));
  b.at(1, 3) = 0.0;
  tracker.record(a, b, grid);  // the max persists
  CHECK(tracker.max_error() == doctest::Approx(std::sqrt(0.1) * 0.25).epsilon(1e-14));
}

TEST_CASE("convergence study produces ordered rows") {
  auto rows = convergence_study(20, {0.64, 0.32});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].dt == 0.64);
  CHECK(rows[0].dx == 0.64);
  CHECK_FALSE(rows[0].order.has_value());
  REQUIRE(rows[1].order.has_value());
  CHECK(rows[1].error < rows[0].error * 1.05);
  CHECK(*rows[1].order == doctest::Approx(std::log2(rows[0].error / rows[1].error)).epsilon(1e-12));
}
