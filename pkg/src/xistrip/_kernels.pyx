# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot numeric kernels.

Contracts, argument conventions and the shared Bernoulli table are
documented in `_kernels_py`; this module must stay behaviourally identical
to it (the test suite compares the two term by term).
"""

from libc.math cimport cos, exp, hypot, log, sin, INFINITY

import numpy as np

from . import _kernels_py as _py

BACKEND_NAME = "compiled"

cdef int _N_B2K = len(_py.B2K_OVER_FACT)
cdef double[13] _B2K_OVER_FACT
for _j in range(_N_B2K):
    _B2K_OVER_FACT[_j] = _py.B2K_OVER_FACT[_j]


cdef inline double complex _cexp(double complex z) noexcept:
    cdef double m = exp(z.real)
    return m * cos(z.imag) + 1j * m * sin(z.imag)


cdef inline double _cabs(double complex z) noexcept:
    return hypot(z.real, z.imag)


cdef inline void _hurwitz_one(
    double complex s,
    double a,
    int n,
    int m,
    double complex *out_value,
    double *out_trunc,
    double *out_abs_sum,
) noexcept:
    cdef double complex ms = -s
    cdef double complex value = 0.0
    cdef double complex p, tail1, tail2, poch, power, term
    cdef double abs_sum = 0.0
    cdef double na, inv_na2, denom
    cdef int k, j

    for k in range(n):
        p = _cexp(ms * log(k + a))
        value = value + p
        abs_sum += _cabs(p)

    na = n + a
    tail1 = _cexp((1.0 - s) * log(na)) / (s - 1.0)
    tail2 = 0.5 * _cexp(ms * log(na))
    value = value + tail1 + tail2
    abs_sum += _cabs(tail1) + _cabs(tail2)

    poch = s
    power = _cexp((ms - 1.0) * log(na))
    inv_na2 = 1.0 / (na * na)
    term = 0.0
    for j in range(1, m + 2):
        term = _B2K_OVER_FACT[j - 1] * poch * power
        if j <= m:
            value = value + term
            abs_sum += _cabs(term)
        poch = poch * (s + 2.0 * j - 1.0) * (s + 2.0 * j)
        power = power * inv_na2

    denom = s.real + 2.0 * m + 1.0
    out_value[0] = value
    if denom > 0.0:
        out_trunc[0] = _cabs(term) * _cabs(s + 2.0 * m + 1.0) / denom
    else:
        out_trunc[0] = INFINITY
    out_abs_sum[0] = abs_sum


def hurwitz_em(double complex s, double a, int n, int m):
    """Euler-Maclaurin sum for zeta(s, a); see `_kernels_py.hurwitz_em`."""
    if m > _N_B2K - 1:
        raise ValueError(f"at most {_N_B2K - 1} correction terms supported")
    cdef double complex value
    cdef double trunc, abs_sum
    _hurwitz_one(s, a, n, m, &value, &trunc, &abs_sum)
    return complex(value), trunc, abs_sum


def hurwitz_em_multi(double complex s, double[:] a_values, int n, int m):
    """Vector form of `hurwitz_em` over offsets ``a_values`` at one s."""
    if m > _N_B2K - 1:
        raise ValueError(f"at most {_N_B2K - 1} correction terms supported")
    cdef Py_ssize_t count = a_values.shape[0]
    values = np.empty(count, dtype=np.complex128)
    truncs = np.empty(count, dtype=np.float64)
    abs_sums = np.empty(count, dtype=np.float64)
    cdef double complex[:] v = values
    cdef double[:] tr = truncs
    cdef double[:] ab = abs_sums
    cdef Py_ssize_t i
    cdef double complex value
    cdef double trunc, abs_sum
    for i in range(count):
        _hurwitz_one(s, a_values[i], n, m, &value, &trunc, &abs_sum)
        v[i] = value
        tr[i] = trunc
        ab[i] = abs_sum
    return values, truncs, abs_sums


def zero_sum(double eps, double t, double[:] ordinates, bint symmetrize):
    """Truncated zero-sum eps / (eps^2 + (t - gamma)^2) over the ordinates."""
    cdef double e2 = eps * eps
    cdef double total = 0.0
    cdef double d
    cdef Py_ssize_t i, n = ordinates.shape[0]
    for i in range(n):
        d = t - ordinates[i]
        total += eps / (e2 + d * d)
    if symmetrize:
        for i in range(n):
            d = t + ordinates[i]
            total += eps / (e2 + d * d)
    return total
