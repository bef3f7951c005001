#include <doctest.h>

#include <cmath>

#include "vnweyl/observables.hpp"
#include "vnweyl/states.hpp"

using namespace vnweyl;

namespace {

HermiteField unit_gaussian(const Grid1D& grid, int n_max, double x0, double sx, double p0) {
  auto quad = gauss_hermite(2 * (n_max + 1));
  return project(InitialState::gaussian(x0, sx, p0), grid, n_max, quad);
}

}  // namespace

TEST_CASE("trace") {
  Grid1D grid(-8.0, 8.0, 400);
  auto f = unit_gaussian(grid, 12, 0.0, 1.0, 0.0);
  CHECK(trace(f, grid) == doctest::Approx(1.0).epsilon(1e-10));

  HermiteField zero(13, 400);
  CHECK(trace(zero, grid) == 0.0);

  HermiteField odd(13, 400);
  odd.at(1, 5) = cplx(0.0, 2.0);
  odd.at(3, 9) = cplx(0.0, -1.0);
  CHECK(trace(odd, grid) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("l2 norm of a single entry") {
  Grid1D grid(0.0, 1.0, 10);
  HermiteField f(3, 10);
  f.at(1, 4) = 1.0;
  CHECK(l2_norm(f, grid) == doctest::Approx(std::sqrt(0.1)).epsilon(1e-14));
}

TEST_CASE("macroscopic densities of gaussian states") {
  Grid1D grid(-8.0, 8.0, 400);
  auto rest = unit_gaussian(grid, 12, 0.0, 1.0, 0.0);
  auto m = macro_densities(rest, grid);
  double dx = grid.dx();
  double mass = 0.0, kin = 0.0;
  for (int j = 0; j < grid.nx; ++j) {
    CHECK(m.rho_u[j] == doctest::Approx(0.0).scale(1.0));
    mass += dx * m.rho[j];
    kin += dx * m.rho_e[j];
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(kin == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(kinetic_energy(rest, grid) == doctest::Approx(0.5).epsilon(1e-10));

  // moving packet: rho_u = i dR/dy(x,0) gives -p0 * rho... with p0 = -4 the
  // phase is e^{+4iy} and i d/dy e^{4iy} = -4, so rho_u / rho = -4 here.
  Grid1D wide(-12.0, 16.0, 700);
  auto moving = unit_gaussian(wide, 60, -5.0, 0.6, -4.0);
  auto mm = macro_densities(moving, wide);
  int jp = 0;
  for (int j = 0; j < wide.nx; ++j)
    if (mm.rho[j] > mm.rho[jp]) jp = j;
  CHECK(mm.rho_u[jp] / mm.rho[jp] == doctest::Approx(-4.0).epsilon(0.02));
  // kinetic energy (p0^2 + 1)/2 per unit mass
  CHECK(kinetic_energy(moving, wide) == doctest::Approx(8.5).epsilon(1e-6));
}

TEST_CASE("wigner transform of the resting packet") {
  Grid1D grid(-8.0, 8.0, 200);
  auto f = unit_gaussian(grid, 12, 5.0, 1.0, 0.0);
  XiGrid xi;
  auto w = wigner(f, grid, xi);
  CHECK(w.max_imag_residual <= 1e-10);
  const double twopi = 2.0 * std::acos(-1.0);
  for (int j = 0; j < grid.nx; j += 17)
    for (int i = 0; i < xi.count; i += 31) {
      double x = grid.center(j), s = xi.node(i);
      double expect = std::exp(-0.5 * ((x - 5.0) * (x - 5.0) + s * s)) / twopi;
      CHECK(w.at(j, i) == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("wigner moments match trace and kinetic energy") {
  Grid1D grid(-12.0, 16.0, 500);
  auto f = unit_gaussian(grid, 60, -5.0, 0.6, -4.0);
  XiGrid xi{-14.0, 14.0, 700};  // wide enough that the xi tail is negligible
  auto w = wigner(f, grid, xi);
  double m0 = 0.0, m2 = 0.0;
  for (int j = 0; j < grid.nx; ++j)
    for (int i = 0; i < xi.count; ++i) {
      m0 += w.at(j, i);
      m2 += w.at(j, i) * xi.node(i) * xi.node(i);
    }
  m0 *= grid.dx() * xi.dxi();
  m2 *= grid.dx() * xi.dxi();
  CHECK(m0 == doctest::Approx(trace(f, grid)).epsilon(1e-6));
  CHECK(m2 == doctest::Approx(2.0 * kinetic_energy(f, grid)).epsilon(1e-5));
}

TEST_CASE("wigner of a moving packet peaks at -p0") {
  Grid1D grid(-12.0, 16.0, 300);
  auto f = unit_gaussian(grid, 60, -5.0, 0.6, -4.0);
  XiGrid xi;
  auto w = wigner(f, grid, xi);
  int jp = 0, ip = 0;
  double best = -1.0;
  for (int j = 0; j < grid.nx; ++j)
    for (int i = 0; i < xi.count; ++i)
      if (w.at(j, i) > best) {
        best = w.at(j, i);
        jp = j;
        ip = i;
      }
  CHECK(grid.center(jp) == doctest::Approx(-5.0).epsilon(0.02));
  CHECK(xi.node(ip) == doctest::Approx(4.0).epsilon(0.02));
}
