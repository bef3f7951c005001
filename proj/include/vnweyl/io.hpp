#pragma once

#include <string>

#include "vnweyl/reference.hpp"
#include "vnweyl/scenario.hpp"

namespace vnweyl {

// Field snapshot: text header <base>.hdr (N, Nx, a, b, hbar, t) plus raw
// little-endian doubles in <base>.bin, row-major (k outer, j inner), real
// then imaginary per entry.
struct SnapshotHeader {
  int n_max = 0;
  int nx = 0;
  double a = 0.0, b = 0.0;
  double hbar = 0.0;
  double time = 0.0;
};

void write_snapshot(const std::string& base_path, const HermiteField& field, const Grid1D& grid, double hbar,
                    double time);
HermiteField read_snapshot(const std::string& base_path, SnapshotHeader& header);

void write_wigner_csv(const std::string& path, const WignerField& w, const Grid1D& grid);
void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows);

struct ObservableRecord {
  double t = 0.0;
  double norm = 0.0;
  double trace = 0.0;
  double kinetic_energy = 0.0;
  double d2 = 0.0;
  double d4 = 0.0;
  int iterations = 0;
};

struct RunSummary {
  std::vector<ObservableRecord> records;
  HermiteField final_field;
  bool solver_failed = false;
  std::string error;
};

// Executes the scenario: steps to t_final, writes observables.csv at every
// output interval and field snapshots at the configured times into
// sc.out_dir. Progress lines go to stderr. On solver failure the partial
// outputs are flushed and solver_failed is set.
RunSummary run_scenario(const Scenario& sc, bool write_outputs = true);

}  // namespace vnweyl
