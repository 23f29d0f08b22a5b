"""Timing comparison of the compiled and pure-Python kernel backends.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Times the Euler-Maclaurin kernels (scalar and multi-offset) and the
zero-sum reduction on workloads shaped like the real ones: the scalar
kernel at a high ordinate where the cutoff N is large, the multi kernel
on a modulus-8 offset set, and the zero sum over ten thousand
ordinates.  A full sign-law line through `momentum_sample` is timed as
the end-to-end figure.  Each measurement reports the best of five
repeats; the two backends are checked to agree before timing.
"""

from __future__ import annotations

import time

import numpy as np

from xistrip.kernels import available_backends
from xistrip.checks import ScanGrid, scan_sign_law
from xistrip.xi import RiemannXi


def _best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def _check_agreement(backends) -> None:
    s = complex(0.55, 700.0)
    offsets = np.array([1 / 8, 3 / 8, 5 / 8, 7 / 8])
    results = {}
    for name, mod in backends.items():
        value, _, _ = mod.hurwitz_em(s, 1.0, 1000, 8)
        multi, _, _ = mod.hurwitz_em_multi(s, offsets, 1000, 8)
        results[name] = (value, multi)
    if len(results) == 2:
        va, ma = results["python"]
        vb, mb = results["compiled"]
        rel = abs(va - vb) / abs(va)
        mrel = float(np.max(np.abs(ma - mb) / np.abs(ma)))
        if rel > 1e-12 or mrel > 1e-12:
            raise SystemExit(f"backends disagree: scalar {rel:g}, multi {mrel:g}")


def main() -> None:
    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}")
    _check_agreement(backends)

    s = complex(0.55, 700.0)
    offsets = np.array([1 / 8, 3 / 8, 5 / 8, 7 / 8])
    ordinates = 14.0 + 0.9 * np.arange(10_000)

    rows = []
    for name in sorted(backends):
        mod = backends[name]
        rows.append((f"hurwitz_em n=1000 ({name})",
                     _best_of(5, lambda m=mod: m.hurwitz_em(s, 1.0, 1000, 8))))
        rows.append((f"hurwitz_em_multi x4 n=1000 ({name})",
                     _best_of(5, lambda m=mod: m.hurwitz_em_multi(s, offsets, 1000, 8))))
        rows.append((f"zero_sum 10k ordinates ({name})",
                     _best_of(5, lambda m=mod: m.zero_sum(0.1, 5000.0, ordinates, True))))

    for label, seconds in rows:
        print(f"{label:45s} {seconds * 1e6:10.1f} us")

    grid = ScanGrid(t_min=40.0, t_max=41.0, t_steps=3, eps_max=0.45, eps_steps=9)
    field_obj = RiemannXi()
    elapsed = _best_of(2, lambda: scan_sign_law(field_obj, grid))
    per_point = elapsed / (3 * 9)
    print(f"{'sign-law line (27 points, active backend)':45s} {elapsed * 1e3:10.1f} ms"
          f"   ({per_point * 1e3:.2f} ms/point)")


if __name__ == "__main__":
    main()
