#include "vnweyl/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace vnweyl {

void write_snapshot(const std::string& base_path, const HermiteField& field, const Grid1D& grid, double hbar,
                    double time) {
  {
    std::ofstream hdr(base_path + ".hdr");
    if (!hdr) throw std::runtime_error("cannot write " + base_path + ".hdr");
    hdr.precision(17);
    hdr << "n_max " << field.num_modes - 1 << "\n"
        << "nx " << field.num_cells << "\n"
        << "a " << grid.a << "\n"
        << "b " << grid.b << "\n"
        << "hbar " << hbar << "\n"
        << "t " << time << "\n";
  }
  std::ofstream bin(base_path + ".bin", std::ios::binary);
  if (!bin) throw std::runtime_error("cannot write " + base_path + ".bin");
  for (const auto& v : field.data) {
    const double re = v.real(), im = v.imag();
    bin.write(reinterpret_cast<const char*>(&re), sizeof(double));
    bin.write(reinterpret_cast<const char*>(&im), sizeof(double));
  }
  if (!bin) throw std::runtime_error("write failed: " + base_path + ".bin");
}

HermiteField read_snapshot(const std::string& base_path, SnapshotHeader& header) {
  std::ifstream hdr(base_path + ".hdr");
  if (!hdr) throw std::runtime_error("cannot read " + base_path + ".hdr");
  std::string key;
  while (hdr >> key) {
    if (key == "n_max") hdr >> header.n_max;
    else if (key == "nx") hdr >> header.nx;
    else if (key == "a") hdr >> header.a;
    else if (key == "b") hdr >> header.b;
    else if (key == "hbar") hdr >> header.hbar;
    else if (key == "t") hdr >> header.time;
    else throw std::runtime_error("unknown header key in " + base_path + ".hdr: " + key);
  }

  HermiteField field(header.n_max + 1, header.nx);
  std::ifstream bin(base_path + ".bin", std::ios::binary);
  if (!bin) throw std::runtime_error("cannot read " + base_path + ".bin");
  for (auto& v : field.data) {
    double re = 0.0, im = 0.0;
    bin.read(reinterpret_cast<char*>(&re), sizeof(double));
    bin.read(reinterpret_cast<char*>(&im), sizeof(double));
    if (!bin) throw std::runtime_error("truncated snapshot: " + base_path + ".bin");
    v = cplx(re, im);
  }
  return field;
}

void write_wigner_csv(const std::string& path, const WignerField& w, const Grid1D& grid) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  // Header row: x, then the xi nodes; one row per cell.
  out << "x";
  for (int i = 0; i < w.xi.count; ++i) out << "," << w.xi.node(i);
  out << "\n";
  for (int j = 0; j < grid.nx; ++j) {
    out << grid.center(j);
    for (int i = 0; i < w.xi.count; ++i) out << "," << w.at(j, i);
    out << "\n";
  }
}

void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  out << "dt,dx,error,order\n";
  for (const auto& r : rows) {
    out << r.dt << "," << r.dx << "," << r.error << ",";
    if (r.order) out << *r.order;
    out << "\n";
  }
}

RunSummary run_scenario(const Scenario& sc, bool write_outputs) {
  sc.validate();
  RunSummary summary;

  const GeneratorContext ctx = make_context(sc);
  const auto quad = gauss_hermite(sc.quadrature_order());
  HermiteField field = initial_field(sc);

  namespace fs = std::filesystem;
  std::ofstream obs;
  if (write_outputs) {
    fs::create_directories(sc.out_dir);
    obs.open(fs::path(sc.out_dir) / "observables.csv");
    if (!obs) throw std::runtime_error("cannot write observables.csv in " + sc.out_dir);
    obs.precision(17);
    obs << "t,norm,trace,kinetic_energy,d2,d4\n";
  }

  const double norm0 = l2_norm(field, sc.grid);
  std::vector<bool> snapshot_done(sc.snapshot_times.size(), false);
  int snapshot_index = 0;

  auto record = [&](int step, double t, const HermiteField& f, int iters) {
    ObservableRecord rec;
    rec.t = t;
    rec.norm = l2_norm(f, sc.grid);
    rec.trace = trace(f, sc.grid);
    rec.kinetic_energy = kinetic_energy(f, sc.grid);
    if (sc.coupling != CouplingMode::none && sc.hbar > 0.0) {
      auto [d2, d4] = residual_norms(f, sc.potential, sc.hbar, sc.grid, quad);
      rec.d2 = d2;
      rec.d4 = d4;
    }
    rec.iterations = iters;
    summary.records.push_back(rec);
    if (obs.is_open()) {
      obs << rec.t << "," << rec.norm << "," << rec.trace << "," << rec.kinetic_energy << "," << rec.d2 << ","
          << rec.d4 << "\n";
      obs.flush();
    }
    std::cerr << "step " << step << " t=" << t << " norm_drift=" << rec.norm - norm0 << " trace=" << rec.trace
              << " krylov_iters=" << iters << "\n";
  };

  StepperConfig cfg = sc.stepper;
  cfg.dt = sc.dt;
  try {
    run_time_loop(field, cfg, ctx, sc.t_final, [&](int step, double t, const HermiteField& f, int iters) {
      if (step % sc.observable_interval == 0 || t >= sc.t_final - 1e-12) record(step, t, f, iters);
      if (write_outputs) {
        for (std::size_t s = 0; s < sc.snapshot_times.size(); ++s) {
          if (!snapshot_done[s] && t >= sc.snapshot_times[s] - 0.5 * sc.dt) {
            char name[64];
            std::snprintf(name, sizeof(name), "snapshot_%03d", snapshot_index++);
            write_snapshot((fs::path(sc.out_dir) / name).string(), f, sc.grid, sc.hbar, t);
            snapshot_done[s] = true;
          }
        }
      }
    });
  } catch (const KrylovNoConvergence& e) {
    summary.solver_failed = true;
    summary.error = e.what();
  }

  summary.final_field = std::move(field);
  return summary;
}

}  // namespace vnweyl
