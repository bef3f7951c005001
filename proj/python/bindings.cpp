// Python bindings for the core solver: scenarios, stepping, observables and
// the convergence harness.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vnweyl/io.hpp"
#include "vnweyl/reference.hpp"
#include "vnweyl/scenario.hpp"

namespace py = pybind11;
using namespace vnweyl;

namespace {

py::array_t<std::complex<double>> field_array(const HermiteField& f) {
  py::array_t<std::complex<double>> a({f.num_modes, f.num_cells});
  std::copy(f.data.begin(), f.data.end(), a.mutable_data());
  return a;
}

HermiteField field_from_array(py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> a) {
  if (a.ndim() != 2) throw std::invalid_argument("field array must be 2-D (modes x cells)");
  HermiteField f(int(a.shape(0)), int(a.shape(1)));
  std::copy(a.data(), a.data() + f.data.size(), f.data.begin());
  return f;
}

}  // namespace

PYBIND11_MODULE(_vnweyl, m) {
  m.doc() = "1D von Neumann equation in Weyl variables: Hermite spectral / finite volume solver";

  py::class_<Grid1D>(m, "Grid1D")
      .def(py::init<double, double, int>(), py::arg("a"), py::arg("b"), py::arg("nx"))
      .def_readonly("a", &Grid1D::a)
      .def_readonly("b", &Grid1D::b)
      .def_readonly("nx", &Grid1D::nx)
      .def("dx", &Grid1D::dx)
      .def("center", &Grid1D::center);

  py::class_<XiGrid>(m, "XiGrid")
      .def(py::init([](double lo, double hi, int count) { return XiGrid{lo, hi, count}; }), py::arg("min") = -8.0,
           py::arg("max") = 8.0, py::arg("count") = 256)
      .def_readwrite("min", &XiGrid::min)
      .def_readwrite("max", &XiGrid::max)
      .def_readwrite("count", &XiGrid::count);

  py::class_<PotentialModel>(m, "PotentialModel")
      .def_static("from_name", &PotentialModel::from_name, py::arg("name"), py::arg("beta") = 0.5)
      .def("value", &PotentialModel::value)
      .def("d1", &PotentialModel::d1)
      .def("d3", &PotentialModel::d3)
      .def_property_readonly("name", &PotentialModel::name);

  py::class_<InitialState>(m, "InitialState")
      .def_static("gaussian", &InitialState::gaussian, py::arg("x0"), py::arg("sigma_x"), py::arg("p0") = 0.0)
      .def_readwrite("x0", &InitialState::x0)
      .def_readwrite("sigma_x", &InitialState::sigma_x)
      .def_readwrite("p0", &InitialState::p0)
      .def_readwrite("unit_trace", &InitialState::unit_trace);

  py::class_<StepperConfig>(m, "StepperConfig")
      .def(py::init<>())
      .def_readwrite("dt", &StepperConfig::dt)
      .def_readwrite("krylov_tol", &StepperConfig::krylov_tol)
      .def_readwrite("krylov_restart", &StepperConfig::krylov_restart)
      .def_readwrite("krylov_max_iter", &StepperConfig::krylov_max_iter);

  py::class_<Scenario>(m, "Scenario")
      .def_readwrite("name", &Scenario::name)
      .def_readwrite("grid", &Scenario::grid)
      .def_readwrite("n_max", &Scenario::n_max)
      .def_readwrite("hbar", &Scenario::hbar)
      .def_readwrite("dt", &Scenario::dt)
      .def_readwrite("t_final", &Scenario::t_final)
      .def_readwrite("potential", &Scenario::potential)
      .def_readwrite("initial", &Scenario::initial)
      .def_readwrite("stepper", &Scenario::stepper)
      .def_readwrite("observable_interval", &Scenario::observable_interval)
      .def_readwrite("xi_grid", &Scenario::xi_grid)
      .def_readwrite("out_dir", &Scenario::out_dir)
      .def("validate", &Scenario::validate);

  py::class_<ObservableRecord>(m, "ObservableRecord")
      .def_readonly("t", &ObservableRecord::t)
      .def_readonly("norm", &ObservableRecord::norm)
      .def_readonly("trace", &ObservableRecord::trace)
      .def_readonly("kinetic_energy", &ObservableRecord::kinetic_energy)
      .def_readonly("d2", &ObservableRecord::d2)
      .def_readonly("d4", &ObservableRecord::d4)
      .def_readonly("iterations", &ObservableRecord::iterations);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("dt", &ConvergenceRow::dt)
      .def_readonly("dx", &ConvergenceRow::dx)
      .def_readonly("error", &ConvergenceRow::error)
      .def_readonly("order", &ConvergenceRow::order);

  m.def("preset_names", &scenario_preset_names);
  m.def("preset", &scenario_preset, py::arg("name"), py::arg("desk") = false);
  m.def("parse_config", &parse_config, py::arg("path"));

  m.def(
      "initial_field", [](const Scenario& sc) { return field_array(initial_field(sc)); }, py::arg("scenario"));

  m.def(
      "run",
      [](const Scenario& sc, bool write_outputs) {
        auto summary = run_scenario(sc, write_outputs);
        if (summary.solver_failed) throw std::runtime_error("solver failure: " + summary.error);
        return py::make_tuple(summary.records, field_array(summary.final_field));
      },
      py::arg("scenario"), py::arg("write_outputs") = false,
      "Run a scenario; returns (records, final_field). Pass write_outputs=True to also write CSVs/snapshots.");

  m.def(
      "step",
      [](py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> field, const Scenario& sc,
         int steps) {
        auto f = field_from_array(field);
        auto ctx = make_context(sc);
        StepperConfig cfg = sc.stepper;
        cfg.dt = sc.dt;
        for (int i = 0; i < steps; ++i) cn_step(f, cfg, ctx);
        return field_array(f);
      },
      py::arg("field"), py::arg("scenario"), py::arg("steps") = 1,
      "Advance a coefficient field by a number of fixed steps of scenario.dt.");

  m.def(
      "trace",
      [](py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> field, const Grid1D& grid) {
        return trace(field_from_array(field), grid);
      },
      py::arg("field"), py::arg("grid"));

  m.def(
      "l2_norm",
      [](py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> field, const Grid1D& grid) {
        return l2_norm(field_from_array(field), grid);
      },
      py::arg("field"), py::arg("grid"));

  m.def(
      "macro_densities",
      [](py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> field, const Grid1D& grid) {
        auto mf = macro_densities(field_from_array(field), grid);
        return py::make_tuple(py::array(py::cast(mf.rho)), py::array(py::cast(mf.rho_u)),
                              py::array(py::cast(mf.rho_e)));
      },
      py::arg("field"), py::arg("grid"), "Returns (rho, rho_u, rho_e) sampled at the cell centers.");

  m.def(
      "wigner",
      [](py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> field, const Grid1D& grid,
         const XiGrid& xi) {
        auto w = wigner(field_from_array(field), grid, xi);
        py::array_t<double> a({grid.nx, xi.count});
        std::copy(w.values.begin(), w.values.end(), a.mutable_data());
        return a;
      },
      py::arg("field"), py::arg("grid"), py::arg("xi"), "Wigner function, shape (nx, xi.count).");

  m.def("convergence_study", &convergence_study, py::arg("n_max"), py::arg("steps"), py::arg("x0") = 5.0,
        py::arg("p0") = 0.0, py::arg("t_final") = -1.0);

  m.def(
      "hermite_values", [](int n_max, double y) { return hermite_values(n_max, y); }, py::arg("n_max"), py::arg("y"));
}
