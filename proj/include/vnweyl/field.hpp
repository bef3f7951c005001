#pragma once

#include "vnweyl/grid.hpp"

namespace vnweyl {

// Hermite coefficient field R_{k,j}, mode k = 0..n_modes-1, cell j = 0..nx-1,
// stored row-major with k outer. This is the simulation state.
struct HermiteField {
  int num_modes = 0;  // N + 1
  int num_cells = 0;
  std::vector<cplx> data;

  HermiteField() = default;
  HermiteField(int modes, int cells) : num_modes(modes), num_cells(cells), data(std::size_t(modes) * cells, cplx(0.0)) {}

  cplx& at(int k, int j) { return data[std::size_t(k) * num_cells + j]; }
  const cplx& at(int k, int j) const { return data[std::size_t(k) * num_cells + j]; }
  cplx* row(int k) { return data.data() + std::size_t(k) * num_cells; }
  const cplx* row(int k) const { return data.data() + std::size_t(k) * num_cells; }

  void set_zero() { std::fill(data.begin(), data.end(), cplx(0.0)); }
};

inline cplx inner_product(const HermiteField& u, const HermiteField& v, const Grid1D& grid) {
  if (u.num_modes != v.num_modes || u.num_cells != v.num_cells)
    throw std::invalid_argument("inner_product: field shape mismatch");
  cplx s(0.0);
  for (std::size_t i = 0; i < u.data.size(); ++i) s += u.data[i] * std::conj(v.data[i]);
  return s * grid.dx();
}

}  // namespace vnweyl
