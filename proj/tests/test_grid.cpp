#include <doctest.h>

#include <cmath>
#include <random>

#include "vnweyl/grid.hpp"

using namespace vnweyl;

namespace {

SpatialRow random_row(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SpatialRow r(n);
  for (auto& v : r) v = cplx(u(rng), u(rng));
  return r;
}

}  // namespace

TEST_CASE("grid geometry") {
  Grid1D grid(-8.0, 8.0, 25);
  CHECK(grid.dx() == doctest::Approx(0.64));
  CHECK(grid.center(0) - grid.dx() / 2 == doctest::Approx(-8.0));
  CHECK(grid.center(24) + grid.dx() / 2 == doctest::Approx(8.0));
  CHECK_THROWS(Grid1D(0.0, 1.0, 2));
  CHECK_THROWS(Grid1D(1.0, 1.0, 10));
}

TEST_CASE("apply_D on simple rows") {
  Grid1D grid(0.0, 4.0, 4);
  std::vector<double> zeroE(4, 0.0);
  SpatialRow ones(4, cplx(1.0));
  SpatialRow out;
  apply_D(ones, zeroE, grid, out);
  // interior cells: centered difference of a constant
  CHECK(out[1] == cplx(0.0));
  CHECK(out[2] == cplx(0.0));
  // edges see a zero ghost
  CHECK(out[0] == cplx(1.0 / (2.0 * grid.dx())));
  CHECK(out[3] == cplx(-1.0 / (2.0 * grid.dx())));

  SpatialRow delta(4, cplx(0.0));
  delta[2] = 1.0;
  apply_D(delta, zeroE, grid, out);
  CHECK(out[1] == cplx(1.0 / (2.0 * grid.dx())));
  CHECK(out[3] == cplx(-1.0 / (2.0 * grid.dx())));
  CHECK(out[0] == cplx(0.0));
  CHECK(out[2] == cplx(0.0));
}

TEST_CASE("force term enters with opposite sign of E") {
  Grid1D grid(-8.0, 8.0, 16);
  std::vector<double> E(16);
  for (int j = 0; j < 16; ++j) E[j] = -grid.center(j);
  SpatialRow ones(16, cplx(1.0));
  SpatialRow out;
  apply_D(ones, E, grid, out);
  for (int j = 1; j < 15; ++j) CHECK(std::abs(out[j] - grid.center(j)) < 1e-13);
}

TEST_CASE("apply_D_star negates only the difference term") {
  Grid1D grid(-1.0, 1.0, 12);
  std::mt19937 rng(7);
  std::vector<double> E(12);
  for (auto& e : E) e = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
  auto row = random_row(12, rng);
  SpatialRow d, ds;
  apply_D(row, E, grid, d);
  apply_D_star(row, E, grid, ds);
  for (int j = 0; j < 12; ++j) {
    cplx sum = d[j] + ds[j];
    CHECK(std::abs(sum - (-2.0 * E[j] * row[j])) < 1e-13);
  }
}

TEST_CASE("hand-checked duality on a tiny grid") {
  Grid1D grid(0.0, 3.0, 3);
  std::vector<double> zeroE(3, 0.0);
  SpatialRow u{1.0, 0.0, 0.0}, v{0.0, 1.0, 0.0};
  SpatialRow dsu, dv;
  apply_D_star(u, zeroE, grid, dsu);
  apply_D(v, zeroE, grid, dv);
  CHECK(inner_product(dsu, v, grid) == inner_product(u, dv, grid));
  CHECK(inner_product(dsu, v, grid).real() == doctest::Approx(0.5));
}

TEST_CASE("randomized duality") {
  Grid1D grid(-5.0, 5.0, 40);
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> un(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> E(40);
    for (auto& e : E) e = un(rng);
    auto u = random_row(40, rng);
    auto v = random_row(40, rng);
    SpatialRow dsu, dv;
    apply_D_star(u, E, grid, dsu);
    apply_D(v, E, grid, dv);
    cplx lhs = inner_product(dsu, v, grid);
    cplx rhs = inner_product(u, dv, grid);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::sqrt(std::abs(inner_product(u, u, grid)) *
                                                  std::abs(inner_product(v, v, grid))));
  }
}

TEST_CASE("inner product basics") {
  Grid1D grid(0.0, 1.0, 4);
  SpatialRow u{cplx(1.0, 1.0), 0.0, 0.0, 0.0}, v{1.0, 0.0, 0.0, 0.0};
  CHECK(inner_product(u, v, grid) == cplx(0.25, 0.25));
  SpatialRow a{1.0, 0.0, 0.0, 0.0}, b{0.0, 1.0, 0.0, 0.0};
  CHECK(inner_product(a, b, grid) == cplx(0.0));
}
