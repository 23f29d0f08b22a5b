"""NumPy implementations of the hot numeric kernels.

This module is the fallback backend: `xistrip.kernels` prefers the compiled
Cython extension and falls back to these functions when the extension is
absent or disabled.  Both backends implement exactly the same contracts and
are tested for agreement, so everything above the kernel layer is
backend-agnostic.

Kernel contracts
----------------
``hurwitz_em(s, a, n, m)``
    Euler-Maclaurin evaluation of the Hurwitz zeta function zeta(s, a):

        sum_{k=0}^{n-1} (k+a)^(-s)
        + (n+a)^(1-s)/(s-1) + (n+a)^(-s)/2
        + sum_{j=1}^{m} B_{2j}/(2j)! * (s)_{2j-1} * (n+a)^(-s-2j+1)

    Returns ``(value, trunc_bound, abs_sum)`` where ``trunc_bound`` is the
    classical remainder bound |T_{m+1} * (s+2m+1)/(Re s + 2m+1)| and
    ``abs_sum`` accumulates the absolute values of all summed terms so the
    caller can model rounding error.

``hurwitz_em_multi(s, a_values, n, m)``
    The same evaluation across a vector of offsets ``a`` at one ``s``
    (the shape needed to assemble Dirichlet L-functions from Hurwitz
    values at r/q).

``zero_sum(eps, t, ordinates, symmetrize)``
    sum over gamma of eps / (eps^2 + (t-gamma)^2), optionally adding the
    mirrored ordinates -gamma.  This is the truncated explicit-formula
    representation of the phase derivative.
"""

from __future__ import annotations

from fractions import Fraction
import math

import numpy as np

BACKEND_NAME = "python"

# Bernoulli numbers B_2, B_4, ..., B_26 (exact).
_B2K = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
)

# B_{2j} / (2j)! as doubles, j = 1..13.
B2K_OVER_FACT = tuple(
    float(b) / math.factorial(2 * (j + 1)) for j, b in enumerate(_B2K)
)

MAX_CORRECTION_TERMS = len(B2K_OVER_FACT) - 1  # one extra term feeds the bound


def hurwitz_em(s: complex, a: float, n: int, m: int) -> tuple[complex, float, float]:
    """Euler-Maclaurin sum for zeta(s, a) with n main terms, m corrections."""
    if m > MAX_CORRECTION_TERMS:
        raise ValueError(f"at most {MAX_CORRECTION_TERMS} correction terms supported")
    base = np.arange(n, dtype=np.float64) + a
    powers = base ** (-s)
    main = powers.sum()
    abs_sum = float(np.abs(powers).sum())

    na = n + a
    tail1 = na ** (1.0 - s) / (s - 1.0)
    tail2 = 0.5 * na ** (-s)
    value = main + tail1 + tail2
    abs_sum += abs(tail1) + abs(tail2)

    # Correction terms share the Pochhammer product (s)_{2j-1} and the
    # descending powers (n+a)^(-s-2j+1); build both incrementally.
    poch = s  # (s)_1
    power = na ** (-s - 1.0)
    inv_na2 = 1.0 / (na * na)
    term = 0j
    for j in range(1, m + 2):
        term = B2K_OVER_FACT[j - 1] * poch * power
        if j <= m:
            value += term
            abs_sum += abs(term)
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j)
        power *= inv_na2
    # `term` now holds T_{m+1}; the classical remainder bound is
    # |T_{m+1}| * |s + 2m + 1| / (Re s + 2m + 1).
    denom = s.real + 2.0 * m + 1.0
    trunc = abs(term) * abs(s + 2.0 * m + 1.0) / denom if denom > 0.0 else math.inf
    return complex(value), float(trunc), abs_sum


def hurwitz_em_multi(
    s: complex, a_values: np.ndarray, n: int, m: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vector form of `hurwitz_em` over offsets ``a_values`` at one s."""
    if m > MAX_CORRECTION_TERMS:
        raise ValueError(f"at most {MAX_CORRECTION_TERMS} correction terms supported")
    a = np.asarray(a_values, dtype=np.float64)
    base = np.arange(n, dtype=np.float64)[:, None] + a[None, :]
    powers = base ** (-s)
    values = powers.sum(axis=0).astype(np.complex128)
    abs_sums = np.abs(powers).sum(axis=0)

    na = n + a
    tail1 = na ** (1.0 - s) / (s - 1.0)
    tail2 = 0.5 * na ** (-s)
    values += tail1 + tail2
    abs_sums += np.abs(tail1) + np.abs(tail2)

    poch = s
    power = na ** (-s - 1.0)
    inv_na2 = 1.0 / (na * na)
    term = np.zeros_like(values)
    for j in range(1, m + 2):
        term = B2K_OVER_FACT[j - 1] * poch * power
        if j <= m:
            values += term
            abs_sums += np.abs(term)
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j)
        power *= inv_na2
    denom = s.real + 2.0 * m + 1.0
    if denom > 0.0:
        truncs = np.abs(term) * (abs(s + 2.0 * m + 1.0) / denom)
    else:
        truncs = np.full_like(abs_sums, math.inf)
    return values, truncs, abs_sums


def zero_sum(eps: float, t: float, ordinates: np.ndarray, symmetrize: bool) -> float:
    """Truncated zero-sum eps / (eps^2 + (t - gamma)^2) over the ordinates."""
    g = np.asarray(ordinates, dtype=np.float64)
    e2 = eps * eps
    total = float((eps / (e2 + (t - g) ** 2)).sum())
    if symmetrize:
        total += float((eps / (e2 + (t + g) ** 2)).sum())
    return total
