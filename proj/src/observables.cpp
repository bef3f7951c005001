#include "vnweyl/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vnweyl/hermite.hpp"

namespace vnweyl {

double trace(const HermiteField& field, const Grid1D& grid) {
  std::vector<double> phi0, dphi0;
  hermite_values_at_zero(field.num_modes - 1, phi0, dphi0);
  cplx tr(0.0);
  for (int k = 0; k < field.num_modes; ++k) {
    if (phi0[k] == 0.0) continue;
    cplx s(0.0);
    for (int j = 0; j < field.num_cells; ++j) s += field.at(k, j);
    tr += phi0[k] * s;
  }
  tr *= grid.dx();
  return tr.real();
}

double l2_norm(const HermiteField& field, const Grid1D& grid) {
  double s = 0.0;
  for (const auto& v : field.data) s += std::norm(v);
  return std::sqrt(s * grid.dx());
}

MacroFields macro_densities(const HermiteField& field, const Grid1D& grid) {
  const int n_max = field.num_modes - 1;
  std::vector<double> phi0, dphi0;
  hermite_values_at_zero(n_max, phi0, dphi0);

  MacroFields out;
  out.rho.assign(field.num_cells, 0.0);
  out.rho_u.assign(field.num_cells, 0.0);
  out.rho_e.assign(field.num_cells, 0.0);

  for (int j = 0; j < field.num_cells; ++j) {
    cplx rho(0.0), rho_u(0.0), rho_e(0.0);
    for (int k = 0; k <= n_max; ++k) {
      const cplx r = field.at(k, j);
      rho += r * phi0[k];
      rho_u += cplx(0.0, 1.0) * r * dphi0[k];
      // Phi_k''(0) = -(2k+1) Phi_k(0)
      rho_e += 0.5 * (2.0 * k + 1.0) * phi0[k] * r;
    }
    out.rho[j] = rho.real();
    out.rho_u[j] = rho_u.real();
    out.rho_e[j] = rho_e.real();
  }
  return out;
}

double kinetic_energy(const HermiteField& field, const Grid1D& grid) {
  const auto macro = macro_densities(field, grid);
  double s = 0.0;
  for (double v : macro.rho_e) s += v;
  return s * grid.dx();
}

WignerField wigner(const HermiteField& field, const Grid1D& grid, const XiGrid& xi) {
  if (xi.count < 2) throw std::invalid_argument("wigner: xi grid needs at least 2 nodes");
  const int n_max = field.num_modes - 1;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);

  WignerField w;
  w.xi = xi;
  w.values.assign(std::size_t(grid.nx) * xi.count, 0.0);

  // (-i)^k cycles with period 4.
  std::vector<double> phi;
  for (int i = 0; i < xi.count; ++i) {
    phi = hermite_values(n_max, xi.node(i));
    for (int j = 0; j < grid.nx; ++j) {
      cplx s(0.0);
      for (int k = 0; k <= n_max; ++k) {
        cplx ik;
        switch (k % 4) {
          case 0: ik = {1.0, 0.0}; break;
          case 1: ik = {0.0, -1.0}; break;
          case 2: ik = {-1.0, 0.0}; break;
          default: ik = {0.0, 1.0}; break;
        }
        s += ik * field.at(k, j) * phi[k];
      }
      s *= norm;
      w.values[std::size_t(j) * xi.count + i] = s.real();
      w.max_imag_residual = std::max(w.max_imag_residual, std::abs(s.imag()));
    }
  }
  return w;
}

}  // namespace vnweyl
