"""Hermite spectral / finite volume solver for the 1D von Neumann equation in Weyl variables."""

try:
    from . import _vnweyl as _core  # installed package layout
except ImportError:
    import _vnweyl as _core  # build-tree layout

ConvergenceRow = _core.ConvergenceRow
Grid1D = _core.Grid1D
InitialState = _core.InitialState
ObservableRecord = _core.ObservableRecord
PotentialModel = _core.PotentialModel
Scenario = _core.Scenario
StepperConfig = _core.StepperConfig
XiGrid = _core.XiGrid
convergence_study = _core.convergence_study
hermite_values = _core.hermite_values
initial_field = _core.initial_field
l2_norm = _core.l2_norm
macro_densities = _core.macro_densities
parse_config = _core.parse_config
preset = _core.preset
preset_names = _core.preset_names
run = _core.run
step = _core.step
trace = _core.trace
wigner = _core.wigner

__all__ = [
    "ConvergenceRow",
    "Grid1D",
    "InitialState",
    "ObservableRecord",
    "PotentialModel",
    "Scenario",
    "StepperConfig",
    "XiGrid",
    "convergence_study",
    "hermite_values",
    "initial_field",
    "l2_norm",
    "macro_densities",
    "parse_config",
    "preset",
    "preset_names",
    "run",
    "step",
    "trace",
    "wigner",
]
