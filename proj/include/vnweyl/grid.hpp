#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace vnweyl {

using cplx = std::complex<double>;
using SpatialRow = std::vector<cplx>;

// Uniform finite-volume mesh of [a, b] with nx cells; x_j is the cell midpoint.
struct Grid1D {
  double a = 0.0;
  double b = 0.0;
  int nx = 0;

  Grid1D() = default;
  Grid1D(double a_, double b_, int nx_) : a(a_), b(b_), nx(nx_) {
    if (nx < 3) throw std::invalid_argument("Grid1D: nx must be >= 3");
    if (!(b > a)) throw std::invalid_argument("Grid1D: b must exceed a");
  }

  double dx() const { return (b - a) / nx; }
  double center(int j) const { return a + (j + 0.5) * dx(); }
};

// D u = du/dx + V' u with V'(x_j) ~ -E_j, centered differences, zero ghosts.
void apply_D(const SpatialRow& row, const std::vector<double>& force, const Grid1D& grid, SpatialRow& out);

// The discrete adjoint: same stencil with the difference term negated.
void apply_D_star(const SpatialRow& row, const std::vector<double>& force, const Grid1D& grid, SpatialRow& out);

// dx * sum_j u_j conj(v_j)
cplx inner_product(const SpatialRow& u, const SpatialRow& v, const Grid1D& grid);

}  // namespace vnweyl
