#include "vnweyl/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace vnweyl {

void apply_generator(const HermiteField& field, const GeneratorContext& ctx, HermiteField& out) {
  const int n_max = field.num_modes - 1;
  const int nx = field.num_cells;
  if (nx != ctx.grid.nx || static_cast<int>(ctx.force.size()) != nx)
    throw std::invalid_argument("apply_generator: shape mismatch");

  apply_coupling(ctx.coupling, field, out);  // real symmetric part

  const double inv2dx = 0.5 / ctx.grid.dx();
  const cplx minus_i(0.0, -1.0);
  for (int k = 0; k <= n_max; ++k) {
    const double c_down = std::sqrt(0.5 * k);        // multiplies D field_{k-1}
    const double c_up = std::sqrt(0.5 * (k + 1));    // multiplies D* field_{k+1}
    const cplx* lower = (k > 0) ? field.row(k - 1) : nullptr;
    const cplx* upper = (k < n_max) ? field.row(k + 1) : nullptr;
    cplx* dst = out.row(k);
    for (int j = 0; j < nx; ++j) {
      cplx adv(0.0);
      if (lower) {
        const cplx right = (j + 1 < nx) ? lower[j + 1] : cplx(0.0);
        const cplx left = (j > 0) ? lower[j - 1] : cplx(0.0);
        adv += c_down * ((right - left) * inv2dx - ctx.force[j] * lower[j]);
      }
      if (upper) {
        const cplx right = (j + 1 < nx) ? upper[j + 1] : cplx(0.0);
        const cplx left = (j > 0) ? upper[j - 1] : cplx(0.0);
        adv += c_up * (-(right - left) * inv2dx - ctx.force[j] * upper[j]);
      }
      dst[j] = minus_i * (adv + dst[j]);
    }
  }
}

namespace {

using Vec = std::vector<cplx>;

inline cplx dot(const Vec& u, const Vec& v) {
  cplx s(0.0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

inline double nrm(const Vec& u) {
  double s = 0.0;
  for (const auto& x : u) s += std::norm(x);
  return std::sqrt(s);
}

// Restarted GMRES with modified Gram-Schmidt and Givens rotations.
// Returns total matvec count; sets x. Throws on non-convergence.
int gmres(const std::function<void(const Vec&, Vec&)>& matvec, const Vec& rhs, Vec& x, double rel_tol, int restart,
          int max_iter) {
  const std::size_t n = rhs.size();
  const double b_norm = nrm(rhs);
  if (b_norm == 0.0) {
    x.assign(n, cplx(0.0));
    return 0;
  }
  const double target = rel_tol * b_norm;

  Vec r(n), w(n);
  int total = 0;

  while (true) {
    matvec(x, r);
    for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
    double beta = nrm(r);
    if (beta <= target) return total;

    const int m = restart;
    std::vector<Vec> basis;
    basis.reserve(m + 1);
    basis.push_back(r);
    for (auto& v : basis[0]) v /= beta;

    // Hessenberg columns and Givens-rotated residual vector.
    std::vector<std::vector<cplx>> hess;
    std::vector<cplx> cs(m), g(m + 1, cplx(0.0));
    std::vector<double> sn(m);
    g[0] = beta;

    int inner = 0;
    for (; inner < m; ++inner) {
      if (total >= max_iter) throw KrylovNoConvergence("GMRES: iteration cap reached");
      matvec(basis[inner], w);
      ++total;

      // The generator is skew-Hermitian, so I - dt/2 M is normal and its
      // Arnoldi Hessenberg is tridiagonal: w has components only along the
      // last two basis vectors (Lanczos three-term recurrence). The true
      // residual is still checked at the end of every cycle, so a gradual
      // loss of orthogonality only costs a restart, never correctness.
      std::vector<cplx> h(inner + 2);
      for (int i = std::max(0, inner - 1); i <= inner; ++i) {
        h[i] = dot(w, basis[i]);
        for (std::size_t idx = 0; idx < n; ++idx) w[idx] -= h[i] * basis[i][idx];
      }
      h[inner + 1] = nrm(w);

      for (int i = std::max(0, inner - 2); i < inner; ++i) {
        const cplx t = std::conj(cs[i]) * h[i] + sn[i] * h[i + 1];
        h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
        h[i] = t;
      }
      const double denom = std::sqrt(std::norm(h[inner]) + std::norm(h[inner + 1]));
      if (denom == 0.0) {
        cs[inner] = 1.0;
        sn[inner] = 0.0;
      } else {
        cs[inner] = h[inner] / denom;
        sn[inner] = h[inner + 1].real() / denom;  // h[inner+1] is real (a norm)
      }
      h[inner] = std::conj(cs[inner]) * h[inner] + sn[inner] * h[inner + 1];
      h[inner + 1] = 0.0;
      g[inner + 1] = -sn[inner] * g[inner];
      g[inner] = std::conj(cs[inner]) * g[inner];
      hess.push_back(std::move(h));

      const double res = std::abs(g[inner + 1]);
      if (res <= target) {
        ++inner;
        break;
      }
      if (inner + 1 < m) {
        const double wn = nrm(w);
        if (wn == 0.0) {
          ++inner;
          break;  // lucky breakdown
        }
        Vec next = w;
        for (auto& v : next) v /= wn;
        basis.push_back(std::move(next));
      }
    }

    // Back substitution for the small triangular system.
    std::vector<cplx> ym(inner);
    for (int i = inner - 1; i >= 0; --i) {
      cplx s = g[i];
      for (int jj = i + 1; jj < inner; ++jj) s -= hess[jj][i] * ym[jj];
      ym[i] = s / hess[i][i];
    }
    for (int i = 0; i < inner; ++i)
      for (std::size_t idx = 0; idx < n; ++idx) x[idx] += ym[i] * basis[i][idx];

    matvec(x, r);
    for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
    if (nrm(r) <= target) return total;
    if (total >= max_iter) throw KrylovNoConvergence("GMRES: iteration cap reached");
  }
}

}  // namespace

int cn_step(HermiteField& field, const StepperConfig& config, const GeneratorContext& ctx) {
  config.validate();
  const double half_dt = 0.5 * config.dt;

  HermiteField scratch_in(field.num_modes, field.num_cells);
  HermiteField scratch_out(field.num_modes, field.num_cells);

  auto matvec = [&](const Vec& v, Vec& out_vec) {
    scratch_in.data = v;
    apply_generator(scratch_in, ctx, scratch_out);
    out_vec.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out_vec[i] = v[i] - half_dt * scratch_out.data[i];
  };

  // rhs = (I + dt/2 M) U_in
  apply_generator(field, ctx, scratch_out);
  Vec rhs(field.data.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = field.data[i] + half_dt * scratch_out.data[i];

  Vec x = field.data;  // zero correction guess relative to U_in
  // Solve past the advertised tolerance so that per-step residuals do not
  // accumulate into a visible norm drift over long runs.
  const int iters = gmres(matvec, rhs, x, 0.02 * config.krylov_tol, config.krylov_restart, config.krylov_max_iter);
  field.data = std::move(x);
  return iters;
}

void run_time_loop(HermiteField& field, const StepperConfig& config, const GeneratorContext& ctx, double t_final,
                   const std::function<void(int, double, const HermiteField&, int)>& on_step) {
  config.validate();
  if (t_final < 0.0) throw std::invalid_argument("t_final must be nonnegative");
  if (on_step) on_step(0, 0.0, field, 0);

  double t = 0.0;
  int step = 0;
  const double eps = 1e-12 * std::max(1.0, t_final);
  while (t < t_final - eps) {
    StepperConfig cfg = config;
    cfg.dt = std::min(config.dt, t_final - t);
    const int iters = cn_step(field, cfg, ctx);
    t += cfg.dt;
    ++step;
    if (on_step) on_step(step, t, field, iters);
  }
}

}  // namespace vnweyl
