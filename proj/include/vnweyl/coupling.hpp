#pragma once

#include <utility>

#include "vnweyl/field.hpp"
#include "vnweyl/hermite.hpp"
#include "vnweyl/potential.hpp"

namespace vnweyl {

enum class CouplingMode { none, full, truncated };

CouplingMode coupling_mode_from_name(const std::string& name);
std::string coupling_mode_name(CouplingMode mode);

// Hermite matrix elements of the potential remainder
//   E^h(x, y) = [V(x + h y/2) - V(x - h y/2)] / h - V'(x) y.
//
// Full mode stores, per cell, only the entries with k + l odd (all others
// vanish by parity); truncated mode keeps the O(h^2) banded y^3 term and
// stores just V'''(x_j).
struct CouplingOperator {
  CouplingMode mode = CouplingMode::none;
  int num_modes = 0;
  int num_cells = 0;
  double hbar = 0.0;

  // full: pair list (k < l, k + l odd) shared by all cells; entries are
  // cell-major, entries[j * pairs.size() + p].
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> entries;

  // truncated: V'''(x_j) per cell.
  std::vector<double> third_derivative;

  double entry(int cell, int k, int l) const;  // full mode, any (k, l)
};

// <y^3 Phi_k, Phi_l>, closed form; zero unless |k - l| is 1 or 3.
double y3_matrix_element(int k, int l);

CouplingOperator assemble_full(const PotentialModel& model, double hbar, const Grid1D& grid, int n_max,
                               const Quadrature& quad);

// Banded y^3 approximation; verifies the hard-coded band coefficients
// against a quadrature evaluation once at construction.
CouplingOperator assemble_truncated(const PotentialModel& model, double hbar, const Grid1D& grid, int n_max);

CouplingOperator coupling_none(int n_max, const Grid1D& grid, double hbar);

// Real symmetric action; the -i factor is applied by the generator.
void apply_coupling(const CouplingOperator& op, const HermiteField& field, HermiteField& out);

// (D2, D4): L^2 norms of the remainder after subtracting the linear (D2)
// and the linear + y^3 (D4) terms from the potential difference quotient.
std::pair<double, double> residual_norms(const HermiteField& field, const PotentialModel& model, double hbar,
                                         const Grid1D& grid, const Quadrature& quad);

}  // namespace vnweyl
