"""Hyperbolic Riemann-Siegel expansion off the critical line.

The classical Z function extends into the strip by splitting each main-sum
term into even and odd parts in eps:

    Z(t, eps) = 2 sum_{n<=N} cosh(eps a_n) cos(b_n) / sqrt(n)
              + 2 i sum_{n<=N} sinh(eps a_n) sin(b_n) / sqrt(n)
              + R0(t)

with N = floor(sqrt(t / 2 pi)),

    a_n = log sqrt(t / (2 pi n^2)),
    b_n = t log sqrt(t / (2 pi e n^2)) - pi/8,

and the leading remainder R0 = (-1)^(N-1) (2 pi / t)^(1/4) C0(p) taken at
the fractional part p = sqrt(t / 2 pi) - N.  At eps = 0 the odd part
vanishes identically and Z(t, 0) is the usual real Z.

The expansion approximates the rescaled completed function

    -xi(1/2 + eps + i t) / (F(t) exp(i eps pi / 4)),
    F(t) = (pi/2)^(1/4) t^(7/4) exp(-pi t / 4),

to within the envelope of the dropped correction orders; `completed_ratio`
computes that reference ratio in the log domain so the comparison stays
finite long after F(t) underflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .logpolar import wrap_phase
from .xi import RiemannXi, StripPoint

__all__ = [
    "RszTerms",
    "c0",
    "r0",
    "f_scale",
    "rsz_eval",
    "completed_ratio",
    "error_envelope",
]

_TWO_PI = 2.0 * math.pi


def c0(p: float) -> float:
    """Leading Riemann-Siegel coefficient cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).

    The quotient has removable singularities at p = 1/4 and p = 3/4 (both
    limits equal 1/2).  Near them the numerator is rewritten exactly as a
    sine of a small argument, so the evaluation loses no accuracy:
    with u = p - 1/4,  C0 = -sin(pi u (2u - 1)) / sin(2 pi u), and with
    v = p - 3/4,  C0 = sin(pi v (2v + 1)) / sin(2 pi v).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"fractional part p = {p:g} outside [0, 1]")
    u = p - 0.25
    if abs(u) < 0.125:
        if abs(u) < 1e-9:
            return 0.5 - u
        return -math.sin(math.pi * u * (2.0 * u - 1.0)) / math.sin(_TWO_PI * u)
    v = p - 0.75
    if abs(v) < 0.125:
        if abs(v) < 1e-9:
            return 0.5 + v
        return math.sin(math.pi * v * (2.0 * v + 1.0)) / math.sin(_TWO_PI * v)
    return math.cos(_TWO_PI * (p * p - p - 0.0625)) / math.cos(_TWO_PI * p)


def r0(t: float, n: int, p: float) -> float:
    """Leading remainder term for the main sum truncated at n."""
    return (-1.0) ** (n - 1) * (_TWO_PI / t) ** 0.25 * c0(p)


def f_scale(t: float) -> float:
    """log F(t) for the envelope F(t) = (pi/2)^(1/4) t^(7/4) exp(-pi t/4)."""
    if t <= 0.0:
        raise ValueError("f_scale needs t > 0")
    return 0.25 * math.log(0.5 * math.pi) + 1.75 * math.log(t) - 0.25 * math.pi * t


@dataclass(frozen=True)
class RszTerms:
    """Decomposition of one Z(t, eps) evaluation.

    ``n_terms`` and ``p`` describe the main-sum cut; ``cosh_sum`` and
    ``sinh_sum`` are the even/odd sums before the factor 2; ``r0`` is the
    remainder term; ``log_f`` is log F(t) for rescaling comparisons.
    """

    n_terms: int
    p: float
    cosh_sum: float
    sinh_sum: float
    r0: float
    log_f: float


def rsz_eval(t: float, eps: float = 0.0) -> tuple[complex, RszTerms]:
    """Evaluate Z(t, eps); requires t >= 2 pi (one main term) and |eps| <= 1/2."""
    if t < _TWO_PI:
        raise ValueError(f"t = {t:g} below 2 pi: the main sum would be empty")
    if abs(eps) > 0.5:
        raise ValueError(f"|eps| = {abs(eps):g} outside the strip")
    sq = math.sqrt(t / _TWO_PI)
    n = int(math.floor(sq))
    p = sq - n
    half_log = 0.5 * math.log(t / _TWO_PI)
    ch = 0.0
    sh = 0.0
    for k in range(1, n + 1):
        a = half_log - math.log(k)
        b = t * (half_log - 0.5 - math.log(k)) - 0.125 * math.pi
        inv_sqrt = 1.0 / math.sqrt(k)
        ch += math.cosh(eps * a) * math.cos(b) * inv_sqrt
        sh += math.sinh(eps * a) * math.sin(b) * inv_sqrt
    rem = r0(t, n, p)
    value = complex(2.0 * ch + rem, 2.0 * sh)
    return value, RszTerms(n, p, ch, sh, rem, f_scale(t))


def completed_ratio(t: float, eps: float = 0.0) -> complex:
    """The reference ratio -xi(1/2+eps+it) / (F(t) exp(i eps pi/4)).

    Assembled in the log domain, so it stays representable where F(t)
    itself underflows (t beyond ~560).
    """
    ev = RiemannXi().eval(StripPoint(t, eps))
    log_mag = ev.value.log_mag - f_scale(t)
    phase = wrap_phase(ev.value.phase - 0.25 * eps * math.pi + math.pi)
    if log_mag > 700.0:
        raise OverflowError("ratio overflows double range")
    return complex(math.exp(log_mag) * math.cos(phase),
                   math.exp(log_mag) * math.sin(phase))


def error_envelope(t: float) -> float:
    """Empirical bound on |Z - completed ratio| from the dropped orders.

    The first omitted correction scales like (2 pi / t)^(3/4); the factor
    3 gives comfortable slack over the strip (checked against the exact
    ratio across t in [50, 1000], |eps| <= 1/2).
    """
    return 3.0 * (_TWO_PI / t) ** 0.75
