#pragma once

#include "vnweyl/field.hpp"

namespace vnweyl {

struct MacroFields {
  std::vector<double> rho;    // R(x, 0)
  std::vector<double> rho_u;  // i dR/dy (x, 0)
  std::vector<double> rho_e;  // -1/2 d2R/dy2 (x, 0)
};

struct XiGrid {
  double min = -8.0;
  double max = 8.0;
  int count = 256;

  double dxi() const { return (max - min) / (count - 1); }
  double node(int i) const { return min + i * dxi(); }
};

struct WignerField {
  XiGrid xi;
  std::vector<double> values;  // cell-major: values[j * xi.count + i]
  double max_imag_residual = 0.0;

  double at(int j, int i) const { return values[std::size_t(j) * xi.count + i]; }
};

// dx sum_{k,j} R_{k,j} Phi_k(0); the imaginary part is checked then dropped.
double trace(const HermiteField& field, const Grid1D& grid);

double l2_norm(const HermiteField& field, const Grid1D& grid);

MacroFields macro_densities(const HermiteField& field, const Grid1D& grid);

// K = -1/2 int d2R/dy2 (x, 0) dx = dx sum_j rho_e_j
double kinetic_energy(const HermiteField& field, const Grid1D& grid);

// W(x_j, xi) = (1/sqrt(2 pi)) sum_k (-i)^k R_{k,j} Phi_k(xi)
WignerField wigner(const HermiteField& field, const Grid1D& grid, const XiGrid& xi);

}  // namespace vnweyl
