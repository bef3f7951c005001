#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vnweyl/grid.hpp"

namespace vnweyl {

enum class PotentialKind { harmonic, quartic, gaussian_barrier, morse, user };

// Potential with analytic derivatives of order 1 and 3.
struct PotentialModel {
  PotentialKind kind = PotentialKind::harmonic;
  double beta = 0.5;  // quartic only
  std::function<double(double)> user_value, user_d1, user_d3;

  static PotentialModel harmonic();
  static PotentialModel quartic(double beta = 0.5);
  static PotentialModel gaussian_barrier();
  static PotentialModel morse();
  static PotentialModel user(std::function<double(double)> value,
                             std::function<double(double)> d1 = nullptr,
                             std::function<double(double)> d3 = nullptr);
  static PotentialModel from_name(const std::string& name, double beta = 0.5);

  double value(double x) const;
  double d1(double x) const;
  double d3(double x) const;

  // True when all derivatives of order >= 5 vanish identically, so the
  // banded y^3 coupling is exact.
  bool polynomial_degree_le4() const {
    return kind == PotentialKind::harmonic || kind == PotentialKind::quartic;
  }
  std::string name() const;
};

double eval_potential(const PotentialModel& model, double x, int order);

// E_j = -(V(x_{j+1}) - V(x_{j-1})) / (2 dx), using ghost midpoints at the ends.
std::vector<double> discrete_force(const PotentialModel& model, const Grid1D& grid);

}  // namespace vnweyl
