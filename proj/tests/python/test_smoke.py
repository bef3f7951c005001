import math
import os
import subprocess

import numpy as np
import pytest

import vnweyl


def test_presets_listed():
    names = vnweyl.preset_names()
    assert set(names) == {"harmonic", "quartic", "tunneling", "morse"}


def test_initial_field_trace_and_norm():
    sc = vnweyl.preset("harmonic", desk=True)
    sc.initial.unit_trace = True
    f = vnweyl.initial_field(sc)
    assert f.shape == (sc.n_max + 1, sc.grid.nx)
    assert vnweyl.trace(f, sc.grid) == pytest.approx(1.0, abs=1e-10)
    assert vnweyl.l2_norm(f, sc.grid) > 0.0


def test_stepping_conserves_norm():
    sc = vnweyl.preset("harmonic", desk=True)
    f = vnweyl.initial_field(sc)
    n0 = vnweyl.l2_norm(f, sc.grid)
    g = vnweyl.step(f, sc, steps=20)
    assert vnweyl.l2_norm(g, sc.grid) == pytest.approx(n0, rel=1e-10)
    # the input array is untouched
    assert vnweyl.l2_norm(f, sc.grid) == pytest.approx(n0, rel=1e-14)


def test_run_records():
    sc = vnweyl.preset("harmonic", desk=True)
    sc.initial.unit_trace = True
    sc.t_final = 50 * sc.dt
    records, final = vnweyl.run(sc)
    assert records[0].t == 0.0
    assert records[-1].t == pytest.approx(sc.t_final)
    # trace fluctuates with the coarse desk resolution but stays near 1
    assert all(r.trace == pytest.approx(1.0, abs=5e-3) for r in records)
    assert final.shape == (sc.n_max + 1, sc.grid.nx)


def test_macro_and_wigner():
    sc = vnweyl.preset("harmonic", desk=True)
    sc.initial.unit_trace = True
    f = vnweyl.initial_field(sc)
    rho, rho_u, rho_e = vnweyl.macro_densities(f, sc.grid)
    assert rho.sum() * sc.grid.dx() == pytest.approx(1.0, abs=1e-10)
    assert np.abs(rho_u).max() < 1e-12  # packet at rest
    w = vnweyl.wigner(f, sc.grid, sc.xi_grid)
    mass = w.sum() * sc.grid.dx() * (sc.xi_grid.max - sc.xi_grid.min) / (sc.xi_grid.count - 1)
    assert mass == pytest.approx(1.0, abs=1e-5)


def test_convergence_rows():
    rows = vnweyl.convergence_study(8, [0.64, 0.32], t_final=math.pi / 2)
    assert len(rows) == 2
    assert rows[0].order is None
    assert rows[1].order is not None


def test_cli_presets():
    cli = os.environ.get("VNWEYL_CLI")
    if not cli:
        pytest.skip("VNWEYL_CLI not set")
    out = subprocess.run([cli, "presets"], capture_output=True, text=True, check=True)
    assert "harmonic" in out.stdout
