#pragma once

#include <vector>

namespace vnweyl {

// Gauss-Hermite quadrature for the weight e^{-y^2}.
//
// `weights` are the classical weights w_q (they underflow for very large
// order); `lifted_weights` hold w_q * e^{y_q^2}, computed stably from the
// Hermite function values, and are what every downstream integral uses.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> lifted_weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

// Values of the normalized Hermite functions Phi_0..Phi_kmax at y.
// derivative_order 0, 1 or 2. The recursion acts on Phi_k directly, so the
// results stay finite for |y| <= 40 and kmax <= 1024.
std::vector<double> hermite_values(int k_max, double y, int derivative_order = 0);

// Phi_k(0) and Phi_k'(0) for k = 0..k_max. Odd k give Phi_k(0) = 0 exactly,
// even k give Phi_k'(0) = 0 exactly.
void hermite_values_at_zero(int k_max, std::vector<double>& phi, std::vector<double>& dphi);

// Nodes are the roots of H_Q, found by Newton iteration on the normalized
// recursion. 1 <= Q <= 2048.
Quadrature gauss_hermite(int order);

}  // namespace vnweyl
