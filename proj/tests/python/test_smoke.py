"""Python-facing smoke tests for the casipol extension module."""

import math
import os
import subprocess

import pytest

import casipol

DATA_DIR = os.environ.get("CASIPOL_DATA_DIR")


def test_constants_and_presets():
    assert casipol.POLARIZABILITY_AU_NM3 == pytest.approx(1.482e-4, rel=1e-12)
    atom = casipol.preset("hydrogen-atom")
    assert atom.alpha0_au == 4.50
    assert atom.omega0_ev == 11.65
    mol = casipol.preset("hydrogen-molecule")
    assert mol.alpha0_au == 5.439
    with pytest.raises(ValueError):
        casipol.preset("helium")


def test_matsubara_zeta():
    geom = casipol.ThermalGeometry(300.0, 3.0)
    expected = 4 * math.pi * casipol.BOLTZMANN_EV_PER_K * 300.0 * 3.0 / casipol.HBAR_C_EV_NM
    assert casipol.matsubara_zeta(1, geom) == pytest.approx(expected, rel=1e-14)
    assert casipol.matsubara_zeta(0, geom) == 0.0


def test_semispace_point_is_attractive_and_converged():
    geom = casipol.ThermalGeometry(300.0, 3.0)
    material = casipol.constant_material(3.0, 2.0)
    res = casipol.free_energy_semispace(geom, material, casipol.preset("hydrogen-atom"))
    assert res.converged
    assert res.value_ev < 0.0
    assert res.terms_used > 100


def test_plate_below_semispace_and_cylinder_below_plate():
    geom = casipol.ThermalGeometry(300.0, 3.0)
    material = casipol.drude_lorentz_material(7.0, 7.0, 26.0, 19.0, 10.0)
    atom = casipol.preset("hydrogen-atom")
    semi = casipol.free_energy_semispace(geom, material, atom)
    plate = casipol.free_energy_plate(geom, material, 30.0, atom)
    shell = casipol.CylinderGeometry(50.0, 20.0)
    cyl = casipol.free_energy_cylinder(geom, shell, material, atom)
    assert abs(plate.value_ev) < abs(semi.value_ev)
    assert abs(cyl.value_ev) < abs(plate.value_ev)


def test_pfa_precondition_raises():
    geom = casipol.ThermalGeometry(300.0, 40.0)
    material = casipol.constant_material(2.0, 2.0)
    shell = casipol.CylinderGeometry(50.0, 20.0)
    with pytest.raises(ValueError, match="PFA"):
        casipol.free_energy_cylinder(geom, shell, material, casipol.preset("hydrogen-atom"))


@pytest.mark.skipif(DATA_DIR is None, reason="CASIPOL_DATA_DIR not set")
def test_bundled_tables_load_and_kk_matches_drude():
    x_path = os.path.join(DATA_DIR, "graphite_like_x.csv")
    # the bundled in-plane table is sampled from a documented Drude model
    wp, gamma = 7.0, 7.0
    for xi in (1.0, 5.0, 20.0):
        eps = casipol.kk_transform(x_path, xi, low="drude-tail", high="inverse-cube")
        exact = 1.0 + wp * wp / (xi * (xi + gamma))
        assert eps == pytest.approx(exact, rel=2e-3)


@pytest.mark.skipif(DATA_DIR is None, reason="CASIPOL_DATA_DIR not set")
def test_material_from_tables_and_interior_model():
    material = casipol.material_from_tables(
        os.path.join(DATA_DIR, "graphite_like_x.csv"),
        os.path.join(DATA_DIR, "graphite_like_z.csv"),
    )
    assert material.eps_x(1.0) > material.eps_z(1.0) > 1.0
    additive = casipol.calibrate_additive(material, casipol.preset("hydrogen-atom"))
    assert additive.strength_k_ev_nm3 > 0
    shell = casipol.CylinderGeometry(50.0, 10.0)
    e_int = casipol.interior_energy(additive, shell, 3.0)
    assert e_int < 0.0


def test_interatomic_scaling():
    atom = casipol.preset("hydrogen-atom")
    e1 = casipol.interatomic_energy(atom, 1.0)
    e2 = casipol.interatomic_energy(atom, 2.0)
    assert e1 < 0
    assert e2 == pytest.approx(e1 / 64.0, rel=1e-12)


def test_sweep_table_shape():
    material = casipol.constant_material(3.0, 2.0)
    table = casipol.sweep_semispace(2.0, 20.0, 4, True,
                                    ["hydrogen-atom", "hydrogen-molecule"], material)
    assert table["columns"][0] == "a_nm"
    assert len(table["rows"]) == 4
    assert table["all_converged"]


@pytest.mark.skipif("CASIPOL_CLI" not in os.environ or DATA_DIR is None,
                    reason="CLI path not provided")
def test_cli_help_and_point(tmp_path):
    cli = os.environ["CASIPOL_CLI"]
    out = subprocess.run([cli, "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    for sub in ("point", "semispace", "plate", "cylinder", "compare-inside-outside",
                "region-map", "kk-transform"):
        assert sub in out.stdout
        sub_help = subprocess.run([cli, sub, "--help"], capture_output=True, text=True)
        assert sub_help.returncode == 0
        assert "--out" in sub_help.stdout

    prefix = tmp_path / "point_run"
    run = subprocess.run(
        [cli, "point", "--body", "semispace", "--material",
         os.path.join(DATA_DIR, "graphite_like.cfg"), "--species", "hydrogen-atom",
         "--a-nm", "3", "--T-K", "300", "--out", str(prefix)],
        capture_output=True, text=True)
    assert run.returncode == 0, run.stderr
    table = (tmp_path / "point_run.dat").read_text()
    assert "# columns:" in table
    assert (tmp_path / "point_run.manifest").exists()
