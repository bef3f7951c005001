#include "vnweyl/grid.hpp"

namespace vnweyl {

void apply_D(const SpatialRow& row, const std::vector<double>& force, const Grid1D& grid, SpatialRow& out) {
  const int nx = grid.nx;
  if (static_cast<int>(row.size()) != nx || static_cast<int>(force.size()) != nx)
    throw std::invalid_argument("apply_D: size mismatch");
  out.resize(nx);
  const double inv2dx = 0.5 / grid.dx();
  for (int j = 0; j < nx; ++j) {
    const cplx right = (j + 1 < nx) ? row[j + 1] : cplx(0.0);
    const cplx left = (j > 0) ? row[j - 1] : cplx(0.0);
    out[j] = (right - left) * inv2dx - force[j] * row[j];
  }
}

void apply_D_star(const SpatialRow& row, const std::vector<double>& force, const Grid1D& grid, SpatialRow& out) {
  const int nx = grid.nx;
  if (static_cast<int>(row.size()) != nx || static_cast<int>(force.size()) != nx)
    throw std::invalid_argument("apply_D_star: size mismatch");
  out.resize(nx);
  const double inv2dx = 0.5 / grid.dx();
  for (int j = 0; j < nx; ++j) {
    const cplx right = (j + 1 < nx) ? row[j + 1] : cplx(0.0);
    const cplx left = (j > 0) ? row[j - 1] : cplx(0.0);
    out[j] = -(right - left) * inv2dx - force[j] * row[j];
  }
}

cplx inner_product(const SpatialRow& u, const SpatialRow& v, const Grid1D& grid) {
  if (u.size() != v.size()) throw std::invalid_argument("inner_product: size mismatch");
  cplx s(0.0);
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * std::conj(v[j]);
  return s * grid.dx();
}

}  // namespace vnweyl
