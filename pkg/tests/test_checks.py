"""Grid scans: classification, exclusions, dual routes, synthetic violations."""

import math

import numpy as np
import pytest

from xistrip.characters import character
from xistrip.checks import (
    ScanGrid,
    _classify,
    compare_reports,
    scan_maxmin,
    scan_monotonicity,
    scan_sign_law,
)
from xistrip.momentum import ProductField
from xistrip.xi import DirichletXi


def test_grid_validation():
    ScanGrid(t_min=0.0, t_max=10.0, t_steps=5)
    with pytest.raises(ValueError):
        ScanGrid(t_min=10.0, t_max=10.0, t_steps=5)
    with pytest.raises(ValueError):
        ScanGrid(t_min=0.0, t_max=10.0, t_steps=1)
    with pytest.raises(ValueError):
        ScanGrid(t_min=0.0, t_max=10.0, t_steps=5, eps_max=0.6)
    with pytest.raises(ValueError):
        ScanGrid(t_min=0.0, t_max=10.0, t_steps=5, eps_steps=4)
    with pytest.raises(ValueError):
        ScanGrid(t_min=0.0, t_max=10.0, t_steps=5, exclusion_radius=-0.1)


def test_grid_axes_symmetric():
    grid = ScanGrid(t_min=5.0, t_max=60.0, t_steps=12, eps_max=0.45, eps_steps=19)
    eps = grid.eps_values()
    assert eps.size == 19
    assert eps[9] == 0.0
    assert np.allclose(eps, -eps[::-1])
    assert grid.t_values()[0] == 5.0 and grid.t_values()[-1] == 60.0


def test_classify():
    # Clear signal with matching sign.
    assert _classify("l_hat", 0.5, 1e-6, 0.1) == "ok"
    # Clear signal, wrong sign.
    assert _classify("l_hat", -0.5, 1e-6, 0.1) == "violation"
    # Sub-noise measurement witnesses nothing.
    assert _classify("l_hat", -1e-8, 1e-6, 0.1) == "ok"
    # eps = 0 row must vanish within the zero-row allowance.
    assert _classify("l_hat", 1e-8, 1e-9, 0.0) == "ok"
    assert _classify("l_hat", 0.5, 1e-9, 0.0) == "violation"


def _clean_field():
    return ProductField.from_ordinates([14.1, 21.0, 25.0, 30.4, 32.9])


def test_clean_scan_no_violations():
    grid = ScanGrid(t_min=15.0, t_max=29.0, t_steps=29, eps_max=0.45, eps_steps=9)
    report = scan_sign_law(_clean_field(), grid)
    assert report.clean
    assert report.summary()["violations"] == 0
    assert len(report.rows) == 29 * 9
    flags = {r.flag for r in report.rows}
    assert flags <= {"ok", "excluded"}


def test_exclusion_disks_cover_zeros():
    grid = ScanGrid(t_min=15.0, t_max=29.0, t_steps=141, eps_max=0.45, eps_steps=9)
    report = scan_sign_law(_clean_field(), grid)
    excluded_ts = {r.t for r in report.rows if r.flag == "excluded"}
    for gamma in (21.0, 25.0):
        assert any(abs(t - gamma) <= 0.05 for t in excluded_ts)
    for r in report.rows:
        if r.flag == "excluded":
            assert math.isnan(r.l_hat)
            assert min(abs(r.t - g) for g in (14.1, 21.0, 25.0, 30.4, 32.9)) <= 0.05


def test_injected_zero_produces_antisymmetric_violations():
    field = ProductField.from_ordinates(
        [14.1, 21.0, 25.0, 30.4, 32.9], extra=[0.6 + 20.0j]
    )
    grid = ScanGrid(t_min=15.0, t_max=45.0, t_steps=61, eps_max=0.45, eps_steps=19)
    zero_ords = np.array([14.1, 21.0, 25.0, 30.4, 32.9])
    sign_report = scan_sign_law(field, grid, zero_ordinates=zero_ords)
    mono_report = scan_monotonicity(field, grid, zero_ordinates=zero_ords)

    assert len(sign_report.violations) == 2
    assert sorted(v.t for v in sign_report.violations) == [20.0, 20.0]
    assert sorted(v.eps for v in sign_report.violations) == pytest.approx([-0.05, 0.05])
    values = sorted(v.value for v in sign_report.violations)
    assert values[0] == pytest.approx(-values[1], rel=1e-6)

    # The dual route flags exactly the same set.
    assert compare_reports(sign_report, mono_report) == []
    assert not any(v.t > 40.0 for v in sign_report.violations)


def test_compare_reports_catches_mismatch():
    field = _clean_field()
    grid_a = ScanGrid(t_min=15.0, t_max=20.0, t_steps=6, eps_max=0.45, eps_steps=9)
    a = scan_sign_law(field, grid_a)
    b = scan_monotonicity(field, grid_a)
    assert compare_reports(a, b) == []
    withheld = ProductField.from_ordinates([14.1, 21.0, 25.0, 30.4, 32.9],
                                           extra=[0.58 + 17.0j])
    c = scan_sign_law(withheld, grid_a, zero_ordinates=np.array([14.1, 21.0]))
    if c.violations:
        assert compare_reports(a, c)


def test_parallel_matches_serial():
    grid = ScanGrid(t_min=15.0, t_max=25.0, t_steps=11, eps_max=0.45, eps_steps=9)
    serial = scan_sign_law(_clean_field(), grid, workers=1)
    parallel = scan_sign_law(_clean_field(), grid, workers=4)
    assert len(serial.rows) == len(parallel.rows)
    for a, b in zip(serial.rows, parallel.rows):
        assert a.t == b.t and a.eps == b.eps and a.flag == b.flag
        if not math.isnan(a.l_hat):
            assert a.l_hat == b.l_hat  # bitwise: same code, same inputs
            assert a.dlogmag_deps == b.dlogmag_deps


def test_progress_callback_sees_every_line():
    grid = ScanGrid(t_min=15.0, t_max=20.0, t_steps=6, eps_max=0.45, eps_steps=5)
    seen = []
    scan_sign_law(_clean_field(), grid, progress=lambda i, n: seen.append((i, n)))
    assert seen == [(i, 6) for i in range(1, 7)]


def test_maxmin_product_field_clean():
    report = scan_maxmin(_clean_field(), 15.0, 34.0)
    assert report.clean
    assert len(report.extrema) >= 3
    kinds = [e.kind for e in report.extrema]
    assert all(a != b for a, b in zip(kinds, kinds[1:]))
    for e in report.extrema:
        assert e.routes_agree
        assert (e.eta_sign > 0) == (e.kind == "max")


def test_maxmin_detects_off_line_pair():
    # A close off-line pair pushes eta negative at a local maximum.
    field = ProductField.from_ordinates([14.0, 26.0], extra=[0.62 + 20.0j])
    report = scan_maxmin(field, 15.0, 25.0)
    assert report.violations  # the criterion must fire somewhere in between


def test_maxmin_riemann_window(riemann):
    report = scan_maxmin(riemann, 10.0, 40.0)
    assert report.clean
    assert all(e.routes_agree for e in report.extrema)
    # Between 29 zeros on [0, 100] the extrema alternate; this window has
    # six zeros, so at least five interior extrema.
    assert len(report.extrema) >= 5


def test_maxmin_dirichlet_chi4():
    field = DirichletXi(character(4, 1))
    report = scan_maxmin(field, 0.0, 30.0)
    assert report.clean
    assert all(e.routes_agree for e in report.extrema)
