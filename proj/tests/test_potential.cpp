#include <doctest.h>

#include <cmath>

#include "vnweyl/potential.hpp"

using namespace vnweyl;

TEST_CASE("preset values and derivatives") {
  auto harm = PotentialModel::harmonic();
  CHECK(harm.value(2.0) == doctest::Approx(2.0));
  CHECK(harm.d1(2.0) == doctest::Approx(2.0));
  CHECK(harm.d3(2.0) == doctest::Approx(0.0));

  auto quart = PotentialModel::quartic(0.5);
  CHECK(quart.value(1.0) == doctest::Approx(0.5 + 0.125));
  CHECK(quart.d1(1.0) == doctest::Approx(1.0 + 0.5));
  CHECK(quart.d3(1.0) == doctest::Approx(3.0));

  auto barrier = PotentialModel::gaussian_barrier();
  CHECK(barrier.value(0.0) == doctest::Approx(1.0));
  CHECK(barrier.d1(0.0) == doctest::Approx(0.0).scale(1.0));

  auto morse = PotentialModel::morse();
  CHECK(morse.value(0.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(morse.d1(0.0) == doctest::Approx(0.0).scale(1.0));
  // depth 20, rate 0.16
  CHECK(morse.value(1e9) == doctest::Approx(20.0));
}

TEST_CASE("analytic derivatives agree with finite differences") {
  const double h = 1e-4;
  for (auto name : {"harmonic", "quartic", "gaussian_barrier", "morse"}) {
    auto m = PotentialModel::from_name(name);
    for (double x : {-1.7, 0.3, 2.5}) {
      double fd1 = (m.value(x + h) - m.value(x - h)) / (2.0 * h);
      CHECK(m.d1(x) == doctest::Approx(fd1).epsilon(1e-6).scale(1.0));
      double fd3 = (m.d1(x + h) - 2.0 * m.d1(x) + m.d1(x - h)) / (h * h);
      CHECK(m.d3(x) == doctest::Approx(fd3).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("polynomial degree flag") {
  CHECK(PotentialModel::harmonic().polynomial_degree_le4());
  CHECK(PotentialModel::quartic().polynomial_degree_le4());
  CHECK_FALSE(PotentialModel::gaussian_barrier().polynomial_degree_le4());
  CHECK_FALSE(PotentialModel::morse().polynomial_degree_le4());
}

TEST_CASE("from_name round trip and errors") {
  for (auto name : {"harmonic", "quartic", "gaussian_barrier", "morse"})
    CHECK(PotentialModel::from_name(name).name() == name);
  CHECK_THROWS(PotentialModel::from_name("cubic"));
}

TEST_CASE("eval_potential dispatch") {
  auto q = PotentialModel::quartic(0.5);
  CHECK(eval_potential(q, 1.0, 0) == doctest::Approx(q.value(1.0)));
  CHECK(eval_potential(q, 1.0, 1) == doctest::Approx(q.d1(1.0)));
  CHECK(eval_potential(q, 1.0, 3) == doctest::Approx(q.d3(1.0)));
  CHECK_THROWS(eval_potential(q, 1.0, 2));
}

TEST_CASE("user model requires supplied derivatives") {
  auto u = PotentialModel::user([](double x) { return x * x; });
  CHECK(u.value(3.0) == doctest::Approx(9.0));
  CHECK_THROWS(u.d1(3.0));
}

TEST_CASE("discrete force: harmonic is exact") {
  Grid1D grid(-8.0, 8.0, 50);
  auto E = discrete_force(PotentialModel::harmonic(), grid);
  REQUIRE((int)E.size() == grid.nx);
  for (int j = 0; j < grid.nx; ++j) CHECK(E[j] == doctest::Approx(-grid.center(j)).epsilon(1e-13));
}

TEST_CASE("discrete force: constant potential gives zero") {
  Grid1D grid(-2.0, 2.0, 16);
  auto u = PotentialModel::user([](double) { return 3.0; });
  for (double e : discrete_force(u, grid)) CHECK(e == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("discrete force: symmetry of even potentials") {
  Grid1D grid(-4.0, 4.0, 32);
  for (auto name : {"harmonic", "gaussian_barrier"}) {
    auto E = discrete_force(PotentialModel::from_name(name), grid);
    for (int j = 0; j < grid.nx; ++j)
      CHECK(E[j] == doctest::Approx(-E[grid.nx - 1 - j]).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("discrete force converges at second order") {
  auto morse = PotentialModel::morse();
  auto err = [&](int nx) {
    Grid1D grid(-2.0, 6.0, nx);
    auto E = discrete_force(morse, grid);
    double m = 0.0;
    for (int j = 0; j < nx; ++j) m = std::max(m, std::abs(E[j] + morse.d1(grid.center(j))));
    return m;
  };
  double e1 = err(40), e2 = err(80), e4 = err(160);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
  CHECK(e2 / e4 == doctest::Approx(4.0).epsilon(0.15));
}
