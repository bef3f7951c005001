#pragma once

#include <functional>

#include "vnweyl/field.hpp"
#include "vnweyl/hermite.hpp"

namespace vnweyl {

// Initial data R^in(x, y). The gaussian kind realizes
//   amplitude * exp(-((x - x0)^2 / sx^2 + y^2) / 2) * exp(-i p0 y),
// amplitude defaulting to 1 / (sqrt(2 pi) sx).
struct InitialState {
  double x0 = 0.0;
  double sigma_x = 1.0;
  double p0 = 0.0;
  double amplitude = 1.0;
  bool unit_trace = false;
  std::function<cplx(double, double)> custom;  // overrides the gaussian when set

  static InitialState gaussian(double x0, double sigma_x, double p0 = 0.0);

  cplx eval(double x, double y) const;
};

// Quadrature projection R_{k,j} = sum_q w_q e^{y_q^2} R^in(x_j, y_q) Phi_k(y_q).
// Warns on stderr when the top retained mode is not negligible; rescales to
// unit trace when requested.
HermiteField project(const InitialState& state, const Grid1D& grid, int n_max, const Quadrature& quad);

}  // namespace vnweyl
