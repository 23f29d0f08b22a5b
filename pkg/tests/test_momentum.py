"""Momentum sampling: finite differences, the exact product oracle, zero sums."""

import math

import numpy as np
import pytest

from xistrip.momentum import (
    AtZeroError,
    PhaseTracker,
    ProductField,
    ZeroSumConfig,
    ddeps_momentum_on_line,
    momentum_sample,
    zero_sum_lhat,
    zero_sum_tail_bound,
)
from xistrip.xi import StripPoint


FIRST_ZEROS = [14.134725141734693, 21.022039638771555, 25.010857580145688]


def test_product_field_momentum_matches_exact(rng):
    field = ProductField.from_ordinates([14.1, 21.0, 25.0], extra=[0.7 + 33.0j])
    for _ in range(20):
        t = float(rng.uniform(5.0, 45.0))
        eps = float(rng.uniform(-0.45, 0.45))
        p = StripPoint(t, eps)
        if min(abs(complex(0.5 + eps, t) - z) for z in field.zeros) < 0.2:
            continue
        sample = momentum_sample(field, p)
        exact = field.exact_lhat(p)
        assert sample.l_hat == pytest.approx(exact, abs=max(1e-9, 50 * sample.est_error))
        assert sample.cr_residual <= 5.0 * (sample.est_error_t + sample.est_error_eps)


def test_cauchy_riemann_identity_riemann_field(riemann, rng):
    for _ in range(10):
        t = float(rng.uniform(2.0, 90.0))
        eps = float(rng.uniform(-0.45, 0.45))
        sample = momentum_sample(riemann, StripPoint(t, eps))
        assert sample.cr_residual <= 5.0 * (sample.est_error_t + sample.est_error_eps), (
            f"CR residual {sample.cr_residual:g} vs budget at t={t:.3f} eps={eps:+.3f}"
        )


def test_antisymmetry_in_eps(riemann):
    for t, eps in [(10.0, 0.3), (44.0, 0.1), (77.7, 0.45)]:
        up = momentum_sample(riemann, StripPoint(t, eps))
        down = momentum_sample(riemann, StripPoint(t, -eps))
        tol = 10.0 * (up.est_error + down.est_error) + 1e-10
        assert up.l_hat == pytest.approx(-down.l_hat, abs=tol)


def test_sign_matches_eps_off_zeros(riemann):
    # Midpoints between consecutive zeros, away from the exclusion radius.
    for t in (10.0, 17.5, 23.0, 30.0):
        for eps in (0.05, 0.2, 0.45):
            s = momentum_sample(riemann, StripPoint(t, eps))
            assert s.l_hat > 0.0
            s = momentum_sample(riemann, StripPoint(t, -eps))
            assert s.l_hat < 0.0


def test_at_zero_rejection(riemann):
    with pytest.raises(AtZeroError):
        momentum_sample(riemann, StripPoint(FIRST_ZEROS[0], 0.0))


def test_step_scaling_with_t():
    field = ProductField.from_ordinates([100.0])
    s_small = momentum_sample(field, StripPoint(1.0, 0.2))
    s_large = momentum_sample(field, StripPoint(900.0, 0.2))
    assert s_large.fd_step_t == pytest.approx(30.0 * s_small.fd_step_t, rel=1e-6)


def test_zero_sum_config_from_records(table_100_path):
    from xistrip.zeros import ingest_zero_table

    records = ingest_zero_table(table_100_path)
    config = ZeroSumConfig.from_records(records)
    assert config.ordinates.size == 100
    assert config.t_cutoff == pytest.approx(float(config.ordinates[-1]))
    assert config.symmetrize


def test_zero_sum_matches_product_field_exactly():
    # For a synthetic field the zero-sum formula IS the momentum, provided
    # both sides run over the same zero set.  from_ordinates places zeros
    # at +gamma only, so compare one-sided; adding the conjugate ordinates
    # explicitly reproduces the symmetrised sum.
    ordinates = [14.1, 21.0, 25.0, 30.4]
    field = ProductField.from_ordinates(ordinates)
    both = ProductField.from_ordinates(
        ordinates, extra=[complex(0.5, -g) for g in ordinates]
    )
    one_sided = ZeroSumConfig(ordinates=np.array(ordinates), symmetrize=False)
    mirrored = ZeroSumConfig(ordinates=np.array(ordinates), symmetrize=True)
    for t, eps in [(18.0, 0.2), (27.0, -0.4), (5.0, 0.1)]:
        p = StripPoint(t, eps)
        assert zero_sum_lhat(p, one_sided) == pytest.approx(
            field.exact_lhat(p), rel=1e-12
        )
        assert zero_sum_lhat(p, mirrored) == pytest.approx(
            both.exact_lhat(p), rel=1e-12
        )


def test_zero_sum_approximates_riemann_momentum(riemann, ordinates_100):
    config = ZeroSumConfig(ordinates=ordinates_100)
    p = StripPoint(20.0, 0.25)
    target = momentum_sample(riemann, p)
    approx = zero_sum_lhat(p, config)
    bound = zero_sum_tail_bound(p, config)
    diff = abs(approx - target.l_hat)
    assert diff <= bound + 10.0 * target.est_error, (
        f"diff {diff:g} exceeds tail bound {bound:g}"
    )
    # The bound must not be vacuous at this height.
    assert bound < 0.01


def test_tail_bound_blows_up_at_cutoff(ordinates_100):
    config = ZeroSumConfig(ordinates=ordinates_100)
    inside = zero_sum_tail_bound(StripPoint(30.0, 0.1), config)
    near = zero_sum_tail_bound(StripPoint(230.0, 0.1), config)
    assert inside < near
    beyond = zero_sum_tail_bound(StripPoint(500.0, 0.1), config)
    assert beyond == math.inf


def test_ddeps_positive_on_line_riemann(riemann):
    for t in (0.0, 5.0, 17.0, 50.0):
        assert ddeps_momentum_on_line(riemann, t) > 0.0


def test_ddeps_at_product_extremum():
    # Between two on-line zeros the momentum slope stays positive.
    field = ProductField.from_ordinates([20.0, 24.0])
    assert ddeps_momentum_on_line(field, 22.0) > 0.0


def test_ddeps_negative_with_off_line_zero():
    # An off-line zero close to the line forces a negative slope at its t.
    field = ProductField.from_ordinates([14.0, 30.0], extra=[0.55 + 20.0j])
    assert ddeps_momentum_on_line(field, 20.0) < 0.0


def test_phase_tracker_unwraps():
    tracker = PhaseTracker()
    raw = [3.0, -3.0, 2.9, -2.9]  # crossings of the branch cut
    out = [tracker.update(p) for p in raw]
    assert out[0] == pytest.approx(3.0)
    assert out[1] == pytest.approx(2.0 * math.pi - 3.0, rel=1e-12)
    for a, b in zip(out, out[1:]):
        assert abs(b - a) < math.pi
    assert tracker.max_jump < math.pi / 2


def test_product_field_eta_real_on_line():
    for zeros in ([14.1], [14.1, 21.0], [14.1, 21.0, 25.0], [0.6 + 20.0j]):
        extra = [] if isinstance(zeros[0], float) else zeros
        field = (
            ProductField.from_ordinates(zeros)
            if isinstance(zeros[0], float)
            else ProductField.from_ordinates([], extra=extra)
        )
        for t in (3.0, 10.0, 26.0):
            eta = field.eta(StripPoint(t, 0.0))
            assert abs(math.sin(eta.phase)) < 1e-12
