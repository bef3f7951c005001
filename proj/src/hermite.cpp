#include "vnweyl/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace vnweyl {

namespace {

constexpr double kOmega0 = 0.7511255444649425;  // pi^{-1/4}

inline double descale(double p, double log_scale) {
  if (p == 0.0) return 0.0;
  if (log_scale > -690.0) return p * std::exp(log_scale);
  // Product may be representable even when exp(log_scale) alone underflows.
  double t = log_scale + std::log(std::abs(p));
  return (p > 0 ? 1.0 : -1.0) * std::exp(t);
}

// Phi_{k+1} = sqrt(2/(k+1)) y Phi_k - sqrt(k/(k+1)) Phi_{k-1}, carried in
// scaled form p_k * exp(log_scale) so that the climb out of the Gaussian
// tail does not flush to zero at large |y|.
void recursion(int k_max, double y, std::vector<double>& phi) {
  phi.resize(k_max + 1);
  double log_scale = -0.5 * y * y + std::log(kOmega0);
  double pm1 = 0.0;
  double p = 1.0;
  phi[0] = descale(p, log_scale);
  for (int k = 0; k < k_max; ++k) {
    double next = std::sqrt(2.0 / (k + 1)) * y * p - std::sqrt(double(k) / (k + 1)) * pm1;
    pm1 = p;
    p = next;
    if (std::abs(p) > 1e250) {
      p *= 1e-250;
      pm1 *= 1e-250;
      log_scale += 575.6462732485114;  // log(1e250)
    }
    phi[k + 1] = descale(p, log_scale);
  }
}

}  // namespace

std::vector<double> hermite_values(int k_max, double y, int derivative_order) {
  if (k_max < 0) throw std::invalid_argument("hermite_values: k_max must be >= 0");
  if (derivative_order < 0 || derivative_order > 2)
    throw std::invalid_argument("hermite_values: derivative_order must be 0, 1 or 2");

  std::vector<double> phi;
  if (derivative_order == 0) {
    recursion(k_max, y, phi);
  } else if (derivative_order == 1) {
    // Phi_k' = -sqrt((k+1)/2) Phi_{k+1} + sqrt(k/2) Phi_{k-1}
    std::vector<double> base;
    recursion(k_max + 1, y, base);
    phi.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
      double lower = (k > 0) ? std::sqrt(0.5 * k) * base[k - 1] : 0.0;
      phi[k] = -std::sqrt(0.5 * (k + 1)) * base[k + 1] + lower;
    }
  } else {
    // Phi_k'' = (y^2 - (2k+1)) Phi_k
    recursion(k_max, y, phi);
    for (int k = 0; k <= k_max; ++k) phi[k] *= y * y - (2 * k + 1);
  }

  for (double v : phi) {
    if (!std::isfinite(v)) throw std::runtime_error("hermite_values: non-finite value in recursion");
  }
  return phi;
}

void hermite_values_at_zero(int k_max, std::vector<double>& phi, std::vector<double>& dphi) {
  phi.assign(k_max + 1, 0.0);
  dphi.assign(k_max + 1, 0.0);
  phi[0] = kOmega0;
  for (int k = 2; k <= k_max; k += 2) {
    phi[k] = -std::sqrt(double(k - 1) / k) * phi[k - 2];
  }
  for (int k = 1; k <= k_max; k += 2) {
    // Phi_{k+1}(0) may lie past k_max; rebuild it from phi[k-1] in that case.
    double upper = (k + 1 <= k_max) ? phi[k + 1] : -std::sqrt(double(k) / (k + 1)) * phi[k - 1];
    dphi[k] = -std::sqrt(0.5 * (k + 1)) * upper + std::sqrt(0.5 * k) * phi[k - 1];
  }
}

Quadrature gauss_hermite(int order) {
  if (order < 1 || order > 2048) throw std::invalid_argument("gauss_hermite: order out of range [1, 2048]");

  const int q = order;
  Quadrature quad;
  quad.nodes.assign(q, 0.0);
  quad.weights.assign(q, 0.0);
  quad.lifted_weights.assign(q, 0.0);

  const int half = (q + 1) / 2;
  std::vector<double> phi;
  double z = 0.0, z_prev = 0.0, z_prev2 = 0.0;

  for (int i = 0; i < half; ++i) {
    // Initial guesses, largest root first.
    if (i == 0) {
      z = std::sqrt(2.0 * q + 1.0) - 1.85575 * std::pow(2.0 * q + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(double(q), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * z_prev2;
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * z_prev2;
    } else {
      z = 2.0 * z - z_prev2;
    }
    if (q % 2 == 1 && i == half - 1) z = 0.0;  // middle root is exact

    bool converged = false;
    for (int iter = 0; iter < 100 && !converged; ++iter) {
      recursion(q, z, phi);
      // Phi_q'(z) = sqrt(2q) Phi_{q-1}(z) - z Phi_q(z); the scale in phi is
      // shared, so the Newton ratio is well conditioned.
      double deriv = std::sqrt(2.0 * q) * phi[q - 1] - z * phi[q];
      double dz = phi[q] / deriv;
      z -= dz;
      if (std::abs(dz) < 1e-15 * (1.0 + std::abs(z))) converged = true;
    }
    if (!converged) throw std::runtime_error("gauss_hermite: Newton iteration did not converge");

    z_prev2 = z_prev;
    z_prev = z;

    recursion(q - 1, z, phi);
    double s = 0.0;
    for (int k = 0; k < q; ++k) s += phi[k] * phi[k];
    const double lifted = 1.0 / s;  // w_q e^{y_q^2} = 1 / sum_k Phi_k(y_q)^2

    quad.nodes[q - 1 - i] = z;
    quad.nodes[i] = -z;
    quad.lifted_weights[q - 1 - i] = lifted;
    quad.lifted_weights[i] = lifted;
    const double w = lifted * std::exp(-z * z);
    quad.weights[q - 1 - i] = w;
    quad.weights[i] = w;
  }

  return quad;
}

}  // namespace vnweyl
