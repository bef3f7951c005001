#include "vnweyl/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace vnweyl {

void Scenario::validate() const {
  if (grid.nx < 3) throw std::invalid_argument("grid.nx must be >= 3");
  if (!(grid.b > grid.a)) throw std::invalid_argument("grid: b must exceed a");
  if (n_max < 0) throw std::invalid_argument("n must be nonnegative");
  if (hbar < 0.0) throw std::invalid_argument("hbar must be nonnegative");
  if (hbar == 0.0 && coupling != CouplingMode::none)
    throw std::invalid_argument("hbar = 0 requires coupling = none");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (t_final < 0.0) throw std::invalid_argument("t_final must be nonnegative");
  if (observable_interval < 1) throw std::invalid_argument("output interval must be >= 1");
  for (double t : snapshot_times)
    if (t < 0.0 || t > t_final + 1e-12) throw std::invalid_argument("snapshot time outside [0, t_final]");
  stepper.validate();
}

Scenario scenario_preset(const std::string& name, bool desk) {
  Scenario sc;
  sc.name = name;
  if (name == "harmonic") {
    sc.grid = Grid1D(-8.0, 8.0, desk ? 128 : 400);
    sc.n_max = 20;
    sc.hbar = 1.0;
    sc.dt = desk ? 0.05 : 0.01;
    sc.t_final = 2.0 * std::numbers::pi;
    sc.potential = PotentialModel::harmonic();
    sc.initial = InitialState::gaussian(5.0, 1.0, 0.0);
    sc.coupling = CouplingMode::truncated;  // exact: the remainder vanishes for quadratics
    sc.xi_grid = XiGrid{-10.0, 10.0, 320};  // packet reaches |xi| ~ 5
  } else if (name == "quartic") {
    sc.grid = Grid1D(-4.0, 4.0, desk ? 200 : 400);
    sc.n_max = desk ? 128 : 400;
    sc.hbar = 0.5;
    sc.dt = desk ? 0.02 : 0.01;
    sc.t_final = 50.0;
    sc.potential = PotentialModel::quartic(0.5);
    sc.initial = InitialState::gaussian(0.0, 0.6, 0.0);
    sc.coupling = CouplingMode::truncated;  // exact for the quartic
  } else if (name == "tunneling") {
    sc.grid = Grid1D(-12.0, 16.0, desk ? 250 : 1000);
    sc.n_max = desk ? 128 : 400;
    sc.hbar = 0.1;
    sc.dt = 0.01;
    sc.t_final = 3.2;
    sc.potential = PotentialModel::gaussian_barrier();
    sc.initial = InitialState::gaussian(-5.0, 0.6, -4.0);  // phase factor e^{+4 i y}
    sc.coupling = CouplingMode::full;
    sc.xi_grid = XiGrid{-12.0, 12.0, 384};  // packet centered at xi = 4, wide tails
  } else if (name == "morse") {
    sc.grid = Grid1D(-4.0, 16.0, desk ? 200 : 1000);
    sc.n_max = desk ? 128 : 400;
    sc.hbar = 0.5;
    sc.dt = 0.01;
    sc.t_final = 20.0;
    sc.potential = PotentialModel::morse();
    sc.initial = InitialState::gaussian(4.0, 0.6, 0.0);
    sc.coupling = CouplingMode::full;
  } else {
    throw std::invalid_argument("unknown scenario preset: " + name);
  }
  return sc;
}

std::vector<std::string> scenario_preset_names() { return {"harmonic", "quartic", "tunneling", "morse"}; }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key, int line) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (...) {
    throw std::invalid_argument("line " + std::to_string(line) + ": bad number for " + key + ": " + v);
  }
}

int to_int(const std::string& v, const std::string& key, int line) {
  try {
    std::size_t pos = 0;
    int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return i;
  } catch (...) {
    throw std::invalid_argument("line " + std::to_string(line) + ": bad integer for " + key + ": " + v);
  }
}

}  // namespace

Scenario parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);

  Scenario sc;
  sc.name = path;
  bool grid_touched = false;
  double grid_a = sc.grid.a, grid_b = sc.grid.b;
  int grid_nx = sc.grid.nx;
  std::string potential_kind = sc.potential.name();
  double potential_beta = 0.5;
  std::string initial_kind = "gaussian";
  double init_x0 = sc.initial.x0, init_sx = sc.initial.sigma_x, init_p0 = sc.initial.p0;
  std::optional<double> init_amplitude;
  bool init_unit_trace = false;

  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string path_key = section.empty() ? key : section + "." + key;

    if (path_key == "preset") {
      Scenario base = scenario_preset(value);
      base.name = path;
      sc = base;
      grid_a = sc.grid.a;
      grid_b = sc.grid.b;
      grid_nx = sc.grid.nx;
      potential_kind = sc.potential.name();
      potential_beta = sc.potential.beta;
      init_x0 = sc.initial.x0;
      init_sx = sc.initial.sigma_x;
      init_p0 = sc.initial.p0;
      init_unit_trace = sc.initial.unit_trace;
    } else if (path_key == "grid.a") {
      grid_a = to_double(value, path_key, line_no);
      grid_touched = true;
    } else if (path_key == "grid.b") {
      grid_b = to_double(value, path_key, line_no);
      grid_touched = true;
    } else if (path_key == "grid.nx") {
      grid_nx = to_int(value, path_key, line_no);
      grid_touched = true;
    } else if (path_key == "hermite.n") {
      sc.n_max = to_int(value, path_key, line_no);
    } else if (path_key == "physics.hbar") {
      sc.hbar = to_double(value, path_key, line_no);
    } else if (path_key == "physics.coupling") {
      sc.coupling = coupling_mode_from_name(value);
    } else if (path_key == "time.dt") {
      sc.dt = to_double(value, path_key, line_no);
    } else if (path_key == "time.t_final") {
      sc.t_final = to_double(value, path_key, line_no);
    } else if (path_key == "potential.kind") {
      potential_kind = value;
    } else if (path_key == "potential.beta") {
      potential_beta = to_double(value, path_key, line_no);
    } else if (path_key == "initial.kind") {
      if (value != "gaussian")
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown initial kind: " + value);
      initial_kind = value;
    } else if (path_key == "initial.x0") {
      init_x0 = to_double(value, path_key, line_no);
    } else if (path_key == "initial.sigma_x") {
      init_sx = to_double(value, path_key, line_no);
    } else if (path_key == "initial.p0") {
      init_p0 = to_double(value, path_key, line_no);
    } else if (path_key == "initial.amplitude") {
      init_amplitude = to_double(value, path_key, line_no);
    } else if (path_key == "initial.normalization") {
      if (value == "raw")
        init_unit_trace = false;
      else if (value == "unit_trace")
        init_unit_trace = true;
      else
        throw std::invalid_argument("line " + std::to_string(line_no) + ": normalization must be raw or unit_trace");
    } else if (path_key == "stepper.krylov_tol") {
      sc.stepper.krylov_tol = to_double(value, path_key, line_no);
    } else if (path_key == "stepper.krylov_restart") {
      sc.stepper.krylov_restart = to_int(value, path_key, line_no);
    } else if (path_key == "stepper.krylov_max_iter") {
      sc.stepper.krylov_max_iter = to_int(value, path_key, line_no);
    } else if (path_key == "output.interval") {
      sc.observable_interval = to_int(value, path_key, line_no);
    } else if (path_key == "output.snapshot_times") {
      sc.snapshot_times.clear();
      std::stringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) sc.snapshot_times.push_back(to_double(tok, path_key, line_no));
      }
    } else if (path_key == "output.xi_min") {
      sc.xi_grid.min = to_double(value, path_key, line_no);
    } else if (path_key == "output.xi_max") {
      sc.xi_grid.max = to_double(value, path_key, line_no);
    } else if (path_key == "output.xi_count") {
      sc.xi_grid.count = to_int(value, path_key, line_no);
    } else if (path_key == "output.out_dir") {
      sc.out_dir = value;
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key: " + path_key);
    }
  }

  (void)grid_touched;
  sc.grid = Grid1D(grid_a, grid_b, grid_nx);
  sc.potential = PotentialModel::from_name(potential_kind, potential_beta);
  sc.initial = InitialState::gaussian(init_x0, init_sx, init_p0);
  if (init_amplitude) sc.initial.amplitude = *init_amplitude;
  sc.initial.unit_trace = init_unit_trace;
  sc.validate();
  return sc;
}

GeneratorContext make_context(const Scenario& sc) {
  GeneratorContext ctx;
  ctx.grid = sc.grid;
  ctx.force = discrete_force(sc.potential, sc.grid);
  switch (sc.coupling) {
    case CouplingMode::none:
      ctx.coupling = coupling_none(sc.n_max, sc.grid, sc.hbar);
      break;
    case CouplingMode::full:
      ctx.coupling = assemble_full(sc.potential, sc.hbar, sc.grid, sc.n_max, gauss_hermite(sc.quadrature_order()));
      break;
    case CouplingMode::truncated:
      ctx.coupling = assemble_truncated(sc.potential, sc.hbar, sc.grid, sc.n_max);
      break;
  }
  return ctx;
}

HermiteField initial_field(const Scenario& sc) {
  return project(sc.initial, sc.grid, sc.n_max, gauss_hermite(sc.quadrature_order()));
}

}  // namespace vnweyl
