#include "vnweyl/coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace vnweyl {

namespace {

inline double remainder_term(const PotentialModel& model, double hbar, double x, double y) {
  return (model.value(x + 0.5 * hbar * y) - model.value(x - 0.5 * hbar * y)) / hbar - model.d1(x) * y;
}

std::vector<std::pair<int, int>> odd_pairs(int n_max) {
  std::vector<std::pair<int, int>> pairs;
  for (int l = 1; l <= n_max; ++l)
    for (int k = (l % 2 == 0) ? 1 : 0; k < l; k += 2) pairs.emplace_back(k, l);
  return pairs;
}

}  // namespace

CouplingMode coupling_mode_from_name(const std::string& name) {
  if (name == "none") return CouplingMode::none;
  if (name == "full") return CouplingMode::full;
  if (name == "truncated") return CouplingMode::truncated;
  throw std::invalid_argument("unknown coupling mode: " + name);
}

std::string coupling_mode_name(CouplingMode mode) {
  switch (mode) {
    case CouplingMode::none: return "none";
    case CouplingMode::full: return "full";
    case CouplingMode::truncated: return "truncated";
  }
  return "?";
}

double CouplingOperator::entry(int cell, int k, int l) const {
  if (mode != CouplingMode::full) throw std::logic_error("entry(): full mode only");
  if ((k + l) % 2 == 0) return 0.0;
  if (k > l) std::swap(k, l);
  // pairs are ordered by l, then k; locate by scan over l's block.
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (pairs[p].first == k && pairs[p].second == l) return entries[std::size_t(cell) * pairs.size() + p];
  }
  return 0.0;
}

double y3_matrix_element(int k, int l) {
  if (k > l) std::swap(k, l);
  if (l == k + 1) {
    return 1.5 * (k + 1) * std::sqrt(0.5 * (k + 1));
  }
  if (l == k + 3) {
    return std::sqrt(double(k + 1) * (k + 2) * (k + 3) / 8.0);
  }
  return 0.0;
}

CouplingOperator assemble_full(const PotentialModel& model, double hbar, const Grid1D& grid, int n_max,
                               const Quadrature& quad) {
  if (hbar <= 0.0) throw std::invalid_argument("assemble_full: hbar must be positive");
  if (quad.order() < 2 * (n_max + 1)) throw std::invalid_argument("assemble_full: quadrature order too low");

  CouplingOperator op;
  op.mode = CouplingMode::full;
  op.num_modes = n_max + 1;
  op.num_cells = grid.nx;
  op.hbar = hbar;
  op.pairs = odd_pairs(n_max);
  op.entries.assign(std::size_t(grid.nx) * op.pairs.size(), 0.0);

  const int q = quad.order();
  // Hermite values per node, node-major.
  std::vector<double> phi(std::size_t(q) * (n_max + 1));
  for (int iq = 0; iq < q; ++iq) {
    auto v = hermite_values(n_max, quad.nodes[iq]);
    std::copy(v.begin(), v.end(), phi.begin() + std::size_t(iq) * (n_max + 1));
  }

  // The integrand is odd*odd = even in y; fold the symmetric node pairs.
  std::vector<int> upper_nodes;
  for (int iq = 0; iq < q; ++iq)
    if (quad.nodes[iq] > 0.0) upper_nodes.push_back(iq);

  for (int j = 0; j < grid.nx; ++j) {
    const double x = grid.center(j);
    double* cell = op.entries.data() + std::size_t(j) * op.pairs.size();
    for (int iq : upper_nodes) {
      const double g = 2.0 * quad.lifted_weights[iq] * remainder_term(model, hbar, x, quad.nodes[iq]);
      if (g == 0.0) continue;
      const double* ph = phi.data() + std::size_t(iq) * (n_max + 1);
      std::size_t p = 0;
      for (int l = 1; l <= n_max; ++l) {
        const double gl = g * ph[l];
        for (int k = (l % 2 == 0) ? 1 : 0; k < l; k += 2) cell[p++] += gl * ph[k];
      }
    }
  }
  return op;
}

CouplingOperator assemble_truncated(const PotentialModel& model, double hbar, const Grid1D& grid, int n_max) {
  if (hbar <= 0.0) throw std::invalid_argument("assemble_truncated: hbar must be positive");

  // One-time self check of the hard-coded band against quadrature.
  static bool band_checked = false;
  if (!band_checked) {
    const auto quad = gauss_hermite(40);
    for (int k : {0, 1, 5, 12}) {
      for (int l : {k + 1, k + 3}) {
        double num = 0.0;
        for (int iq = 0; iq < quad.order(); ++iq) {
          auto v = hermite_values(l, quad.nodes[iq]);
          num += quad.lifted_weights[iq] * std::pow(quad.nodes[iq], 3) * v[k] * v[l];
        }
        if (std::abs(num - y3_matrix_element(k, l)) > 1e-10)
          throw std::logic_error("assemble_truncated: y^3 band coefficients fail quadrature check");
      }
    }
    band_checked = true;
  }

  CouplingOperator op;
  op.mode = CouplingMode::truncated;
  op.num_modes = n_max + 1;
  op.num_cells = grid.nx;
  op.hbar = hbar;
  op.third_derivative.resize(grid.nx);
  for (int j = 0; j < grid.nx; ++j) op.third_derivative[j] = model.d3(grid.center(j));
  return op;
}

CouplingOperator coupling_none(int n_max, const Grid1D& grid, double hbar) {
  CouplingOperator op;
  op.mode = CouplingMode::none;
  op.num_modes = n_max + 1;
  op.num_cells = grid.nx;
  op.hbar = hbar;
  return op;
}

void apply_coupling(const CouplingOperator& op, const HermiteField& field, HermiteField& out) {
  if (field.num_modes != op.num_modes || field.num_cells != op.num_cells)
    throw std::invalid_argument("apply_coupling: shape mismatch");
  out = HermiteField(field.num_modes, field.num_cells);

  if (op.mode == CouplingMode::none) return;

  const int n_max = op.num_modes - 1;
  const int nx = op.num_cells;

  if (op.mode == CouplingMode::full) {
    const std::size_t np = op.pairs.size();
    for (int j = 0; j < nx; ++j) {
      const double* cell = op.entries.data() + std::size_t(j) * np;
      for (std::size_t p = 0; p < np; ++p) {
        const auto [k, l] = op.pairs[p];
        const double m = cell[p];
        out.at(k, j) += m * field.at(l, j);
        out.at(l, j) += m * field.at(k, j);
      }
    }
    return;
  }

  // truncated: h^2 V'''/24 times the four-term y^3 band
  const double h2 = op.hbar * op.hbar;
  for (int k = 0; k <= n_max; ++k) {
    const double c_m1 = (k >= 1) ? y3_matrix_element(k - 1, k) : 0.0;
    const double c_p1 = (k + 1 <= n_max) ? y3_matrix_element(k, k + 1) : 0.0;
    const double c_m3 = (k >= 3) ? y3_matrix_element(k - 3, k) : 0.0;
    const double c_p3 = (k + 3 <= n_max) ? y3_matrix_element(k, k + 3) : 0.0;
    for (int j = 0; j < nx; ++j) {
      cplx s(0.0);
      if (c_m1 != 0.0) s += c_m1 * field.at(k - 1, j);
      if (c_p1 != 0.0) s += c_p1 * field.at(k + 1, j);
      if (c_m3 != 0.0) s += c_m3 * field.at(k - 3, j);
      if (c_p3 != 0.0) s += c_p3 * field.at(k + 3, j);
      out.at(k, j) = h2 * (op.third_derivative[j] / 24.0) * s;
    }
  }
}

std::pair<double, double> residual_norms(const HermiteField& field, const PotentialModel& model, double hbar,
                                         const Grid1D& grid, const Quadrature& quad) {
  const int n_max = field.num_modes - 1;
  const int q = quad.order();
  const double h2 = hbar * hbar;

  std::vector<double> phi(std::size_t(q) * (n_max + 1));
  for (int iq = 0; iq < q; ++iq) {
    auto v = hermite_values(n_max, quad.nodes[iq]);
    std::copy(v.begin(), v.end(), phi.begin() + std::size_t(iq) * (n_max + 1));
  }

  double d2 = 0.0, d4 = 0.0;
  for (int j = 0; j < grid.nx; ++j) {
    const double x = grid.center(j);
    const double v3 = model.d3(x);
    for (int iq = 0; iq < q; ++iq) {
      const double y = quad.nodes[iq];
      const double* ph = phi.data() + std::size_t(iq) * (n_max + 1);
      cplx r(0.0);
      for (int k = 0; k <= n_max; ++k) r += field.at(k, j) * ph[k];
      const double rem2 = remainder_term(model, hbar, x, y);
      const double rem4 = rem2 - (h2 / 24.0) * v3 * y * y * y;
      const double w = quad.lifted_weights[iq];
      d2 += w * std::norm(rem2 * r);
      d4 += w * std::norm(rem4 * r);
    }
  }
  const double dx = grid.dx();
  return {std::sqrt(dx * d2), std::sqrt(dx * d4)};
}

}  // namespace vnweyl
