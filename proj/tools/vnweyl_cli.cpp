// Command-line driver: scenario runs, the convergence table, and Wigner
// post-processing of saved snapshots.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "vnweyl/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D von Neumann equation in Weyl variables: Hermite spectral / finite volume solver"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "run a scenario and write observables + snapshots");
  std::string preset, config_path, out_dir;
  bool desk = false;
  run_cmd->add_option("--preset", preset, "scenario preset name");
  run_cmd->add_option("--config", config_path, "scenario config file");
  run_cmd->add_option("--out-dir", out_dir, "output directory (overrides the scenario)");
  run_cmd->add_flag("--desk", desk, "reduced-resolution preset variant");

  // convergence
  auto* conv_cmd = app.add_subcommand("convergence", "harmonic convergence table, dt = dx");
  int conv_n = 20;
  std::vector<double> conv_steps;
  std::string conv_out = "convergence.csv";
  conv_cmd->add_option("--n", conv_n, "number of Hermite modes");
  conv_cmd->add_option("--steps", conv_steps, "refinement list of dt = dx values")->expected(-1);
  conv_cmd->add_option("--out", conv_out, "output CSV path");

  // presets
  auto* presets_cmd = app.add_subcommand("presets", "list scenario presets");

  // wigner
  auto* wigner_cmd = app.add_subcommand("wigner", "post-process a snapshot into a Wigner CSV");
  std::string snap_base, wigner_out = "wigner.csv";
  double xi_min = -8.0, xi_max = 8.0;
  int xi_count = 256;
  wigner_cmd->add_option("snapshot", snap_base, "snapshot base path (without .hdr/.bin)")->required();
  wigner_cmd->add_option("--out", wigner_out, "output CSV path");
  wigner_cmd->add_option("--xi-min", xi_min, "xi grid lower bound");
  wigner_cmd->add_option("--xi-max", xi_max, "xi grid upper bound");
  wigner_cmd->add_option("--xi-count", xi_count, "xi grid node count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets_cmd->parsed()) {
      for (const auto& name : vnweyl::scenario_preset_names()) {
        const auto sc = vnweyl::scenario_preset(name);
        std::cout << name << ": domain [" << sc.grid.a << ", " << sc.grid.b << "], Nx=" << sc.grid.nx
                  << ", N=" << sc.n_max << ", hbar=" << sc.hbar << ", dt=" << sc.dt << ", T=" << sc.t_final
                  << ", potential=" << sc.potential.name() << ", coupling=" << coupling_mode_name(sc.coupling)
                  << "\n";
      }
      return kExitOk;
    }

    if (run_cmd->parsed()) {
      vnweyl::Scenario sc;
      try {
        if (!preset.empty() && !config_path.empty()) {
          std::cerr << "error: give either --preset or --config, not both\n";
          return kExitConfig;
        }
        if (!preset.empty())
          sc = vnweyl::scenario_preset(preset, desk);
        else if (!config_path.empty())
          sc = vnweyl::parse_config(config_path);
        else {
          std::cerr << "error: --preset or --config required\n";
          return kExitConfig;
        }
        if (!out_dir.empty()) sc.out_dir = out_dir;
        sc.validate();
      } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
      }
      const auto summary = vnweyl::run_scenario(sc);
      if (summary.solver_failed) {
        std::cerr << "solver failure: " << summary.error << "\n";
        return kExitSolver;
      }
      return kExitOk;
    }

    if (conv_cmd->parsed()) {
      if (conv_steps.empty()) {
        std::cerr << "usage error: --steps needs at least one dt = dx value\n";
        return kExitConfig;
      }
      const auto rows = vnweyl::convergence_study(conv_n, conv_steps);
      vnweyl::write_convergence_csv(conv_out, rows);
      for (const auto& r : rows) {
        std::cout << "dt=dx=" << r.dt << "  error=" << r.error;
        if (r.order) std::cout << "  order=" << *r.order;
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (wigner_cmd->parsed()) {
      vnweyl::SnapshotHeader header;
      const auto field = vnweyl::read_snapshot(snap_base, header);
      const vnweyl::Grid1D grid(header.a, header.b, header.nx);
      vnweyl::XiGrid xi;
      xi.min = xi_min;
      xi.max = xi_max;
      xi.count = xi_count;
      const auto w = vnweyl::wigner(field, grid, xi);
      vnweyl::write_wigner_csv(wigner_out, w, grid);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const vnweyl::KrylovNoConvergence& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
