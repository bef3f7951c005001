#pragma once

#include <optional>

#include "vnweyl/scenario.hpp"

namespace vnweyl {

struct ConvergenceRow {
  double dt = 0.0;
  double dx = 0.0;
  double error = 0.0;
  std::optional<double> order;
};

// Exact solution of the harmonic scenario: the Gaussian Wigner packet rotates
// rigidly in phase space, so R(t) is again a coherent Gaussian with center
//   xc(t) = x0 cos t + xi0 sin t,   xic(t) = -x0 sin t + xi0 cos t,
// xi0 = -p0, projected onto the Hermite basis. sigma_x must be 1.
HermiteField harmonic_exact_field(double t, const Grid1D& grid, int n_max, const Quadrature& quad, double x0,
                                  double p0 = 0.0);

// Closed-form Hermite coefficient of the coherent Gaussian at one point,
// kept as an independent cross-check of the projected field:
//   R_k(x) = A(x) pi^{1/4} (-i p)^k / sqrt(2^k k!) e^{-p^2/4}.
cplx coherent_gaussian_mode(int k, double x, double xc, double p);

// max_n sqrt( sum_{k,j} dx |numeric - exact|^2 ), accumulated step by step.
class ErrorTracker {
 public:
  void record(const HermiteField& numeric, const HermiteField& exact, const Grid1D& grid);
  double max_error() const { return max_error_; }

 private:
  double max_error_ = 0.0;
};

// Runs the harmonic scenario with dt = dx for each entry of `steps`
// (domain [-8, 8]) and reports the error against the exact solution at every
// step, with the observed order between consecutive rows.
std::vector<ConvergenceRow> convergence_study(int n_max, const std::vector<double>& steps, double x0 = 5.0,
                                              double p0 = 0.0, double t_final = -1.0);

// Single harmonic run at (dt, dx); returns the max-over-steps error.
double harmonic_run_error(int n_max, double dt, double dx, double x0 = 5.0, double p0 = 0.0, double t_final = -1.0);

}  // namespace vnweyl
