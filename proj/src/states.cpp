#include "vnweyl/states.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace vnweyl {

InitialState InitialState::gaussian(double x0, double sigma_x, double p0) {
  InitialState s;
  s.x0 = x0;
  s.sigma_x = sigma_x;
  s.p0 = p0;
  s.amplitude = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma_x);
  return s;
}

cplx InitialState::eval(double x, double y) const {
  if (custom) return custom(x, y);
  const double dxs = (x - x0) / sigma_x;
  const double mag = amplitude * std::exp(-0.5 * (dxs * dxs + y * y));
  return mag * std::exp(cplx(0.0, -p0 * y));
}

HermiteField project(const InitialState& state, const Grid1D& grid, int n_max, const Quadrature& quad) {
  if (quad.order() < 2 * (n_max + 1)) throw std::invalid_argument("project: quadrature order too low");

  HermiteField field(n_max + 1, grid.nx);
  const int q = quad.order();
  std::vector<std::vector<double>> phi(q);
  for (int iq = 0; iq < q; ++iq) phi[iq] = hermite_values(n_max, quad.nodes[iq]);

  for (int j = 0; j < grid.nx; ++j) {
    const double x = grid.center(j);
    for (int iq = 0; iq < q; ++iq) {
      const cplx rw = quad.lifted_weights[iq] * state.eval(x, quad.nodes[iq]);
      for (int k = 0; k <= n_max; ++k) field.at(k, j) += rw * phi[iq][k];
    }
  }

  double max_abs = 0.0, top_abs = 0.0;
  for (int k = 0; k <= n_max; ++k)
    for (int j = 0; j < grid.nx; ++j) {
      const double a = std::abs(field.at(k, j));
      if (a > max_abs) max_abs = a;
      if (k == n_max && a > top_abs) top_abs = a;
    }
  if (max_abs > 0.0 && top_abs / max_abs > 1e-8) {
    std::cerr << "warning: top Hermite mode carries |R_N|/max|R_k| = " << top_abs / max_abs
              << "; increase N for this initial state\n";
  }

  if (state.unit_trace) {
    std::vector<double> phi0, dphi0;
    hermite_values_at_zero(n_max, phi0, dphi0);
    cplx tr(0.0);
    for (int k = 0; k <= n_max; ++k)
      for (int j = 0; j < grid.nx; ++j) tr += field.at(k, j) * phi0[k];
    tr *= grid.dx();
    if (std::abs(tr) <= 1e-14) throw std::runtime_error("project: trace too small for unit-trace normalization");
    for (auto& v : field.data) v /= tr.real();
  }
  return field;
}

}  // namespace vnweyl
