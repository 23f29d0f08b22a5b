"""Hyperbolic main-sum evaluation: C0, remainder, envelope comparisons."""

import cmath
import math

import mpmath as mp
import numpy as np
import pytest

from xistrip.rsz import c0, completed_ratio, error_envelope, f_scale, r0, rsz_eval


def _mp_c0(p: float) -> float:
    # cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), limits at the cosine zeros.
    with mp.workdps(40):
        x = mp.mpf(p)
        num = mp.cos(2 * mp.pi * (x**2 - x - mp.mpf(1) / 16))
        den = mp.cos(2 * mp.pi * x)
        if abs(den) < mp.mpf("1e-25"):
            h = mp.mpf("1e-12")
            return float(
                (
                    mp.cos(2 * mp.pi * ((x + h) ** 2 - (x + h) - mp.mpf(1) / 16))
                    / mp.cos(2 * mp.pi * (x + h))
                    + mp.cos(2 * mp.pi * ((x - h) ** 2 - (x - h) - mp.mpf(1) / 16))
                    / mp.cos(2 * mp.pi * (x - h))
                )
                / 2
            )
        return float(num / den)


def test_c0_endpoints_exact():
    ref = math.cos(math.pi / 8)
    assert c0(0.0) == pytest.approx(ref, abs=1e-15)
    assert c0(1.0) == pytest.approx(ref, abs=1e-15)


def test_c0_matches_closed_form():
    for p in np.linspace(0.0, 1.0, 211):
        assert c0(float(p)) == pytest.approx(_mp_c0(float(p)), abs=1e-12), p


def test_c0_smooth_through_singular_points():
    for center in (0.25, 0.75):
        base = c0(center)
        for d in (1e-10, 1e-7, 1e-4):
            assert c0(center + d) == pytest.approx(base, abs=1e-3)
            assert c0(center - d) == pytest.approx(base, abs=1e-3)


def test_c0_bounds():
    values = [c0(float(p)) for p in np.linspace(0.0, 1.0, 1001)]
    assert min(values) == pytest.approx(c0(0.5), abs=1e-12)
    assert max(values) <= math.cos(math.pi / 8) + 1e-15


def test_c0_domain():
    with pytest.raises(ValueError):
        c0(-0.1)
    with pytest.raises(ValueError):
        c0(1.1)


def test_f_scale_frozen_value():
    # log F(1) = (1/4) log(pi/2) + (7/4) log 1 - pi/4.
    assert f_scale(1.0) == pytest.approx(0.25 * math.log(math.pi / 2) - math.pi / 4,
                                         rel=1e-14)


def test_r0_alternates_with_n():
    t1 = 2.0 * math.pi * 1.44  # N = 1
    t2 = 2.0 * math.pi * 4.41  # N = 2
    sq1 = math.sqrt(t1 / (2 * math.pi))
    sq2 = math.sqrt(t2 / (2 * math.pi))
    v1 = r0(t1, 1, sq1 - 1.0)
    v2 = r0(t2, 2, sq2 - 2.0)
    assert v1 > 0.0 > v2 or v1 < 0.0 < v2


def test_rsz_domain_errors():
    with pytest.raises(ValueError):
        rsz_eval(5.0, 0.0)
    with pytest.raises(ValueError):
        rsz_eval(100.0, 0.6)


def test_im_z_exactly_zero_on_line():
    for t in (100.0, 250.0, 777.0):
        z, _ = rsz_eval(t, 0.0)
        assert z.imag == 0.0


def test_z_conjugate_symmetry_in_eps():
    z_up, _ = rsz_eval(300.0, 0.2)
    z_dn, _ = rsz_eval(300.0, -0.2)
    assert cmath.isclose(z_dn, z_up.conjugate(), rel_tol=1e-13)


@pytest.mark.parametrize("t", [50.0, 100.0, 200.0, 500.0, 1000.0])
def test_on_line_comparison_within_envelope(t):
    z, _ = rsz_eval(t, 0.0)
    ref = completed_ratio(t, 0.0)
    assert abs(z - ref) <= error_envelope(t)


@pytest.mark.parametrize("eps", [-0.5, -0.2, 0.1, 0.35, 0.5])
def test_off_line_comparison_within_envelope(eps):
    for t in (100.0, 400.0):
        z, _ = rsz_eval(t, eps)
        ref = completed_ratio(t, eps)
        assert abs(z - ref) <= error_envelope(t), (t, eps, abs(z - ref))


def test_terms_breakdown():
    t = 200.0
    z, terms = rsz_eval(t, 0.25)
    assert terms.n_terms == int(math.floor(math.sqrt(t / (2 * math.pi))))
    assert 0.0 <= terms.p < 1.0
    rebuilt = complex(2.0 * terms.cosh_sum + terms.r0, 2.0 * terms.sinh_sum)
    assert cmath.isclose(rebuilt, z, rel_tol=1e-13)


def test_envelope_tightens_with_t():
    assert error_envelope(1000.0) < error_envelope(100.0) < error_envelope(50.0)
