"""Phase derivatives along the strip and their zero-sum representation.

The central quantity is l_hat(t, eps) = d/dt arg xi(1/2 + eps + i t),
estimated by Richardson-extrapolated central differences of the unwrapped
phase.  Its companion d/d eps log|xi| must equal l_hat wherever xi is
holomorphic and nonzero (they are the two Cauchy-Riemann halves of the
same complex derivative), which gives every sample an internal
cross-check.

The same quantity has an exact expansion over the nontrivial zeros
rho = beta + i gamma:

    l_hat(t, eps) = sum over rho of
        (1/2 + eps - beta) / ((1/2 + eps - beta)^2 + (t - gamma)^2)

so under the critical-line hypothesis every term carries the sign of eps.
`zero_sum_lhat` evaluates the truncated sum and `zero_sum_tail_bound`
bounds what the truncation dropped, using the standard zero-counting
density.  `ProductField` builds a finite product over an explicit zero
list; for it the expansion is exact, which pins down the mechanism tests:
an injected off-line zero must flip the sign of l_hat in a predictable
neighbourhood.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .logpolar import LogPolarComplex, SeriesError, wrap_phase
from .xi import StripPoint, XiEvaluation

__all__ = [
    "AtZeroError",
    "MomentumSample",
    "PhaseTracker",
    "momentum_sample",
    "ZeroSumConfig",
    "zero_sum_lhat",
    "zero_sum_tail_bound",
    "ddeps_momentum_on_line",
    "ProductField",
]

_EPS_MACH = 2.220446049250313e-16

# A sample is rejected when the centre value sits within this factor of
# its own series error: the phase of a value indistinguishable from zero
# is noise.
_NEAR_ZERO_FACTOR = 10.0


class AtZeroError(ArithmeticError):
    """Momentum requested at (or numerically inside) a zero of the field."""


@dataclass(frozen=True)
class MomentumSample:
    """One phase-derivative sample with its error budget.

    ``l_hat`` and ``dlogmag_deps`` are the two Cauchy-Riemann routes to
    the same analytic quantity; ``est_error_t`` / ``est_error_eps`` bound
    their respective finite-difference errors (Richardson residual plus
    rounding and series noise).
    """

    point: StripPoint
    l_hat: float
    dlogmag_deps: float
    fd_step_t: float
    fd_step_eps: float
    est_error_t: float
    est_error_eps: float

    @property
    def est_error(self) -> float:
        return self.est_error_t + self.est_error_eps

    @property
    def cr_residual(self) -> float:
        """|l_hat - dlogmag_deps|, the Cauchy-Riemann consistency gap."""
        return abs(self.l_hat - self.dlogmag_deps)


class PhaseTracker:
    """Accumulates a continuous (unwrapped) phase along a scan.

    Feed raw principal-branch phases in scan order; each call returns the
    unwrapped phase.  ``max_jump`` records the largest single-step change,
    which scans use to verify the step resolved the phase (jumps above
    pi/2 mean the step was too coarse).
    """

    def __init__(self):
        self._raw = None
        self._unwrapped = 0.0
        self.max_jump = 0.0

    def update(self, phase: float) -> float:
        if self._raw is None:
            self._unwrapped = phase
        else:
            delta = wrap_phase(phase - self._raw)
            if abs(delta) > self.max_jump:
                self.max_jump = abs(delta)
            self._unwrapped += delta
        self._raw = phase
        return self._unwrapped


def _default_step_t(t: float) -> float:
    return 1e-4 * math.sqrt(max(1.0, abs(t)))


def _reject_near_zero(ev: XiEvaluation) -> None:
    err = ev.series_error
    if ev.value.is_zero or err.estimated_rel_error * _NEAR_ZERO_FACTOR > 1.0:
        raise AtZeroError(
            f"field numerically vanishes at (t={ev.point.t:g}, eps={ev.point.eps:g}); "
            "phase is undefined there"
        )


def _unwrap_stencil(phases: list[float]) -> tuple[list[float], float]:
    """Unwrap a short ordered stencil; returns (unwrapped, max jump)."""
    out = [phases[0]]
    worst = 0.0
    for i in range(1, len(phases)):
        delta = wrap_phase(phases[i] - phases[i - 1])
        out.append(out[-1] + delta)
        worst = max(worst, abs(delta))
    return out, worst


def momentum_sample(
    field,
    point: StripPoint,
    h_t: float | None = None,
    h_eps: float = 1e-4,
) -> MomentumSample:
    """Estimate l_hat and d log|xi| / d eps at one strip point.

    Both derivatives use two central differences (steps h and h/2) and
    Richardson extrapolation; the reported error is the gap between the
    two levels plus a rounding floor.  The t-step is halved automatically
    when the phase jumps by more than pi/2 between stencil points, and an
    `AtZeroError` is raised when the centre value is within a factor 10
    of its own series error (the sample would be meaningless noise).
    """
    if h_t is None:
        h_t = _default_step_t(point.t)
    center = field.eta_evaluation(point)
    _reject_near_zero(center)
    series_rel = center.series_error.estimated_rel_error

    # -- phase derivative along t, with step-halving on unresolved jumps
    for _ in range(26):
        offsets = (-h_t, -0.5 * h_t, 0.0, 0.5 * h_t, h_t)
        evs = [
            center if dt == 0.0 else field.eta_evaluation(StripPoint(point.t + dt, point.eps))
            for dt in offsets
        ]
        for ev in evs:
            _reject_near_zero(ev)
        raw = [ev.value.phase for ev in evs]
        unwrapped, worst = _unwrap_stencil(raw)
        if worst <= 0.5 * math.pi:
            break
        h_t *= 0.5
    else:
        raise ArithmeticError(
            f"phase not resolved at (t={point.t:g}, eps={point.eps:g}) even "
            f"after shrinking the step to {h_t:g}"
        )
    d1 = (unwrapped[4] - unwrapped[0]) / (2.0 * h_t)
    d2 = (unwrapped[3] - unwrapped[1]) / h_t
    l_hat = (4.0 * d2 - d1) / 3.0
    phase_scale = max(1.0, max(abs(u) for u in unwrapped))
    noise_t = (2.0 * series_rel + 4.0 * _EPS_MACH * phase_scale) / h_t
    est_t = abs(d1 - d2) + noise_t

    # -- log-magnitude derivative across the line
    eps_offsets = (-h_eps, -0.5 * h_eps, 0.5 * h_eps, h_eps)
    evs_e = [field.eta_evaluation(StripPoint(point.t, point.eps + de)) for de in eps_offsets]
    for ev in evs_e:
        _reject_near_zero(ev)
    lm = [ev.value.log_mag for ev in evs_e]
    m1 = (lm[3] - lm[0]) / (2.0 * h_eps)
    m2 = (lm[2] - lm[1]) / h_eps
    dlogmag = (4.0 * m2 - m1) / 3.0
    mag_scale = max(1.0, max(abs(v) for v in lm))
    noise_e = (2.0 * series_rel + 4.0 * _EPS_MACH * mag_scale) / h_eps
    est_e = abs(m1 - m2) + noise_e

    return MomentumSample(
        point=point,
        l_hat=l_hat,
        dlogmag_deps=dlogmag,
        fd_step_t=h_t,
        fd_step_eps=h_eps,
        est_error_t=est_t,
        est_error_eps=est_e,
    )


# ---------------------------------------------------------------------
# Zero-sum representation
# ---------------------------------------------------------------------


@dataclass
class ZeroSumConfig:
    """Truncated zero-sum setup: which ordinates, and whether to mirror.

    ``ordinates`` are the positive ordinates gamma of on-line zeros in
    ascending order; ``symmetrize`` adds the conjugate family at -gamma,
    which is what the Riemann field needs.  ``t_cutoff`` is the height the
    table covers, used by the tail bound.
    """

    ordinates: np.ndarray
    symmetrize: bool = True
    t_cutoff: float = 0.0

    def __post_init__(self):
        self.ordinates = np.ascontiguousarray(self.ordinates, dtype=np.float64)
        if self.ordinates.size and np.any(np.diff(self.ordinates) < 0.0):
            raise ValueError("ordinates must be ascending")
        if self.t_cutoff == 0.0 and self.ordinates.size:
            self.t_cutoff = float(self.ordinates[-1])

    @classmethod
    def from_records(cls, records, symmetrize: bool = True) -> "ZeroSumConfig":
        """Build from `zeros.ZeroRecord` objects (or anything with .ordinate)."""
        ords = np.array(sorted(r.ordinate for r in records), dtype=np.float64)
        return cls(ordinates=ords, symmetrize=symmetrize)


def zero_sum_lhat(point: StripPoint, config: ZeroSumConfig) -> float:
    """The truncated sum over known zeros of eps / (eps^2 + (t-gamma)^2)."""
    return kernels.zero_sum(point.eps, point.t, config.ordinates, config.symmetrize)


def _tail_integral(t_cutoff: float, t: float) -> float:
    """Integral bound for sum over gamma > T of density / (gamma - t)^2."""
    gap = t_cutoff - t
    if gap <= 0.0:
        return math.inf
    first = math.log(t_cutoff / (2.0 * math.pi)) / gap
    if abs(t) < 1e-6:
        second = 1.0 / t_cutoff
    else:
        second = math.log(t_cutoff / gap) / t
    return first + second


def zero_sum_tail_bound(point: StripPoint, config: ZeroSumConfig) -> float:
    """Bound on the contribution of ordinates above the table cutoff.

    Uses the counting density dN ~ log(gamma / 2 pi) / (2 pi) d gamma and
    the bound eps/(eps^2 + d^2) <= |eps| / d^2, integrated from the
    cutoff; a 1.25 safety factor absorbs the density's lower-order terms.
    Requires |t| at least one mean gap below the cutoff.
    """
    T = config.t_cutoff
    if T <= 0.0:
        return math.inf
    total = _tail_integral(T, point.t)
    if config.symmetrize:
        total += _tail_integral(T, -point.t)
    return 1.25 * abs(point.eps) / (2.0 * math.pi) * total


# ---------------------------------------------------------------------
# The eps-derivative of the momentum on the critical line
# ---------------------------------------------------------------------


def ddeps_momentum_on_line(field, t: float, h: float = 1e-3) -> float:
    """d l_hat / d eps at eps = 0, from the real restriction eta(t).

    On the line the Cauchy-Riemann structure collapses the derivative to

        (eta (-eta'') + eta'^2) / (eta^2 + eta'^2)

    with all derivatives in t.  The stencil values are rescaled by their
    maximum log-magnitude before leaving the log domain, so the formula's
    scale invariance keeps deep-decay points (log|eta| ~ -700) exact.
    Raises `AtZeroError` when numerator and denominator both vanish
    (a double zero, which the critical-line hypotheses exclude).
    """
    pts = [StripPoint(t - h, 0.0), StripPoint(t, 0.0), StripPoint(t + h, 0.0)]
    vals = [field.eta(p) for p in pts]
    ref = max(v.log_mag for v in vals)
    if ref == -math.inf:
        raise AtZeroError(f"eta vanishes on the whole stencil at t = {t:g}")
    y = [math.cos(v.phase) * math.exp(v.log_mag - ref) for v in vals]
    d1 = (y[2] - y[0]) / (2.0 * h)
    d2 = (y[2] - 2.0 * y[1] + y[0]) / (h * h)
    denom = y[1] * y[1] + d1 * d1
    if denom < 1e-280:
        raise AtZeroError(f"eta and eta' both vanish near t = {t:g}")
    return (y[1] * (-d2) + d1 * d1) / denom


# ---------------------------------------------------------------------
# Synthetic fields with explicit zeros
# ---------------------------------------------------------------------


class ProductField:
    """A finite product f(s) = prod (s - rho) over an explicit zero list.

    The momentum of this field is *exactly* the zero-sum formula over its
    own zeros, so it separates the finite-difference machinery from the
    analytic-number-theory content: scanners must reproduce the predicted
    sign structure, including violations caused by injected off-line
    zeros.  ``mirror`` adds the reflected partner 1 - conj(rho) for each
    off-line zero, matching the functional-equation pairing.

    When the zero set is closed under reflection across the critical line
    (which ``mirror=True`` guarantees), the product on the line satisfies
    conj(f) = (-1)^n f with n the zero count, so a fixed rotation by
    (n mod 2) pi/2 makes eta genuinely real there; `eta` applies it.
    The field is not conjugate-symmetric in t and is meant for scans at
    t >= 0.
    """

    character = None

    def __init__(self, zeros, mirror: bool = True, label: str = "synthetic"):
        rho = []
        for z in zeros:
            z = complex(z)
            rho.append(z)
            if mirror and abs(z.real - 0.5) > 1e-12:
                rho.append(complex(1.0 - z.real, z.imag))
        self._rho = np.array(sorted(rho, key=lambda z: (z.imag, z.real)), dtype=np.complex128)
        self._eta_rotation = 0.5 * math.pi * (len(rho) % 2)
        self.label = label

    @classmethod
    def from_ordinates(cls, ordinates, extra=(), mirror: bool = True,
                       label: str = "synthetic") -> "ProductField":
        """On-line zeros at the given ordinates plus optional extra zeros."""
        zeros = [complex(0.5, g) for g in ordinates] + [complex(z) for z in extra]
        return cls(zeros, mirror=mirror, label=label)

    @property
    def zeros(self) -> np.ndarray:
        return self._rho.copy()

    def eval(self, point: StripPoint) -> XiEvaluation:
        d = point.s - self._rho
        a = np.abs(d)
        if np.any(a == 0.0):
            value = LogPolarComplex(-math.inf, 0.0, True)
        else:
            value = LogPolarComplex.from_parts(
                float(np.log(a).sum()), float(np.angle(d).sum())
            )
        return XiEvaluation(point, value, SeriesError(0, 0.0, 0.0))

    def eta_evaluation(self, point: StripPoint) -> XiEvaluation:
        ev = self.eval(point)
        return XiEvaluation(point, ev.value.rotated(self._eta_rotation), ev.series_error)

    def eta(self, point: StripPoint) -> LogPolarComplex:
        return self.eval(point).value.rotated(self._eta_rotation)

    def exact_lhat(self, point: StripPoint) -> float:
        """Analytic momentum: the zero-sum over this field's own zeros."""
        sigma = 0.5 + point.eps
        dx = sigma - self._rho.real
        dy = point.t - self._rho.imag
        return float((dx / (dx * dx + dy * dy)).sum())

    def __repr__(self) -> str:
        return f"ProductField({self._rho.size} zeros, label={self.label!r})"
