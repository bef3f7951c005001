#pragma once

#include <optional>
#include <string>

#include "vnweyl/dynamics.hpp"
#include "vnweyl/observables.hpp"
#include "vnweyl/states.hpp"

namespace vnweyl {

// A complete run description.
struct Scenario {
  std::string name = "custom";
  Grid1D grid{-8.0, 8.0, 100};
  int n_max = 20;       // highest Hermite mode
  double hbar = 1.0;    // 0 selects the semi-classical limit system (coupling none)
  double dt = 0.01;
  double t_final = 1.0;
  PotentialModel potential = PotentialModel::harmonic();
  InitialState initial = InitialState::gaussian(5.0, 1.0, 0.0);
  CouplingMode coupling = CouplingMode::full;
  StepperConfig stepper;
  // output plan
  int observable_interval = 10;  // in steps
  std::vector<double> snapshot_times;
  XiGrid xi_grid;
  std::string out_dir = "out";

  void validate() const;

  // Quadrature order used for every downstream integral.
  int quadrature_order() const { return 2 * (n_max + 1); }
};

// The four built-in scenarios; `desk` selects reduced (N, Nx) variants.
Scenario scenario_preset(const std::string& name, bool desk = false);
std::vector<std::string> scenario_preset_names();

// Sectioned key=value config file; a preset can be named with `preset = ...`
// at the top and then overridden key by key. Unknown keys are errors.
Scenario parse_config(const std::string& path);

// Assembles the generator context (force field + coupling operator).
GeneratorContext make_context(const Scenario& sc);

// Initial Hermite field for the scenario.
HermiteField initial_field(const Scenario& sc);

}  // namespace vnweyl
