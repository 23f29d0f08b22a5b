"""Backend selection for the numeric kernels.

The compiled Cython extension is preferred when importable; the NumPy
module `_kernels_py` is the fallback.  Setting the environment variable
``XISTRIP_FORCE_PYTHON=1`` before import forces the fallback, which is
useful for benchmarking and for debugging suspected extension issues.

Both backends satisfy the contracts documented in `_kernels_py` and the
test suite checks them against each other whenever the extension is
present.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

if os.environ.get("XISTRIP_FORCE_PYTHON", "") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND_NAME

MAX_CORRECTION_TERMS: int = _kernels_py.MAX_CORRECTION_TERMS


def hurwitz_em(s: complex, a: float, n: int, m: int) -> tuple[complex, float, float]:
    return _impl.hurwitz_em(complex(s), float(a), int(n), int(m))


def hurwitz_em_multi(s, a_values, n: int, m: int):
    arr = np.ascontiguousarray(a_values, dtype=np.float64)
    return _impl.hurwitz_em_multi(complex(s), arr, int(n), int(m))


def zero_sum(eps: float, t: float, ordinates, symmetrize: bool = True) -> float:
    arr = np.ascontiguousarray(ordinates, dtype=np.float64)
    return _impl.zero_sum(float(eps), float(t), arr, bool(symmetrize))


def available_backends() -> dict[str, object]:
    """Map of importable backend name -> module (for benchmarks and tests)."""
    backends: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        backends["compiled"] = _kernels
    except ImportError:
        pass
    return backends
