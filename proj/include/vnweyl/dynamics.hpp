#pragma once

#include <functional>
#include <stdexcept>

#include "vnweyl/coupling.hpp"
#include "vnweyl/field.hpp"

namespace vnweyl {

struct StepperConfig {
  double dt = 0.01;
  double krylov_tol = 1e-10;
  int krylov_restart = 40;
  int krylov_max_iter = 500;

  void validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(krylov_tol > 0.0 && krylov_tol < 1.0)) throw std::invalid_argument("krylov_tol out of (0, 1)");
  }
};

struct KrylovNoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything the generator needs besides the state itself.
struct GeneratorContext {
  Grid1D grid;
  std::vector<double> force;  // E_j
  CouplingOperator coupling;
};

// out_k = -i [ sqrt(k/2) D field_{k-1} + sqrt((k+1)/2) D* field_{k+1} ]
//         - i (coupling action on field)_k
void apply_generator(const HermiteField& field, const GeneratorContext& ctx, HermiteField& out);

// One Crank-Nicolson step: solves (I - dt/2 M) U = (I + dt/2 M) U_in with a
// restarted GMRES, matrix-free, starting from U_in. Returns the iteration
// count; throws KrylovNoConvergence without committing the step on failure.
int cn_step(HermiteField& field, const StepperConfig& config, const GeneratorContext& ctx);

// Fixed-dt time loop over [0, t_final]; the last step is shortened to land
// exactly on t_final. The callback sees every accepted step (plus t = 0 with
// iterations = 0).
void run_time_loop(HermiteField& field, const StepperConfig& config, const GeneratorContext& ctx, double t_final,
                   const std::function<void(int step, double time, const HermiteField&, int iterations)>& on_step);

}  // namespace vnweyl
