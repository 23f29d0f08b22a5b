"""Regenerate the bundled Riemann zero tables in data/.

Two tables are produced:

* ``riemann_zeros_0100.txt`` -- the first 100 ordinates from mpmath at 30
  digits, written with a 1e-12 precision claim.  This is the high-trust
  anchor used by near-zone tests.
* ``riemann_zeros_10k.txt``  -- the first 10000 ordinates.  The low range
  (first 140 zeros) comes from mpmath; above that a vectorised
  Riemann-Siegel scan locates sign changes of Z(t) and bisects them.
  With only the leading correction term the located ordinates are good to
  a few parts in 1e-3 at worst, so the header claims 5e-3.

The scan is validated three ways before anything is written: the total
count must match the zero-counting integral within the drift allowance,
a handful of deep zeros are compared against mpmath directly, and the
sequence must be strictly increasing with sane gaps.

Run from the repository root:  python3 scripts/make_zero_table.py
"""

from __future__ import annotations

import math
import sys
import time
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from xistrip.zeros import ZeroRecord, save_zero_table  # noqa: E402

TWO_PI = 2.0 * math.pi
TOTAL = 10_000
ANCHOR = 140          # zeros taken from mpmath
SCAN_STEP = 0.008
RS_PRECISION = 5e-3   # claimed worst-case ordinate error of scanned zeros
SPOT_INDICES = (141, 200, 500, 1000, 2000, 3500, 5000, 7000, 8500, 9999, 10_000)


def theta(t: np.ndarray) -> np.ndarray:
    """Riemann-Siegel theta, asymptotic form (ample accuracy for t > 100)."""
    t = np.asarray(t, dtype=np.float64)
    return (
        0.5 * t * np.log(t / TWO_PI)
        - 0.5 * t
        - 0.125 * math.pi
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
    )


def _c0(p: np.ndarray) -> np.ndarray:
    """Leading Riemann-Siegel correction coefficient.

    The 0/0 points at p = 1/4 and 3/4 both have limit 1/2; near them the
    quotient is replaced by that limit, which costs O(1e-3) locally and
    nothing elsewhere.
    """
    den = np.cos(TWO_PI * p)
    num = np.cos(TWO_PI * (p * p - p - 0.0625))
    safe = np.abs(den) > 1e-3
    out = np.full_like(p, 0.5)
    np.divide(num, den, out=out, where=safe)
    return out


def rs_z(t: np.ndarray) -> np.ndarray:
    """Riemann-Siegel Z(t) with the leading remainder term, vectorised.

    The main-sum length N = floor(sqrt(t / 2 pi)) is constant on bands,
    so the input is processed band by band.
    """
    t = np.asarray(t, dtype=np.float64)
    z = np.empty_like(t)
    sq = np.sqrt(t / TWO_PI)
    n_of_t = np.floor(sq).astype(np.int64)
    th = theta(t)
    for n in np.unique(n_of_t):
        mask = n_of_t == n
        tm = t[mask]
        thm = th[mask]
        k = np.arange(1, n + 1, dtype=np.float64)
        # sum_k cos(theta - t log k) / sqrt(k)
        phases = thm[:, None] - tm[:, None] * np.log(k)[None, :]
        main = (np.cos(phases) / np.sqrt(k)[None, :]).sum(axis=1)
        p = sq[mask] - n
        r0 = (-1.0) ** (n - 1) * (TWO_PI / tm) ** 0.25 * _c0(p)
        z[mask] = 2.0 * main + r0
    return z


def scan_zeros(t_lo: float, t_hi: float) -> np.ndarray:
    """Ordinates of Z sign changes on [t_lo, t_hi], bisected to ~1e-9."""
    grid = np.arange(t_lo, t_hi + SCAN_STEP, SCAN_STEP)
    zv = rs_z(grid)
    flips = np.nonzero(np.sign(zv[:-1]) * np.sign(zv[1:]) < 0)[0]
    a = grid[flips].copy()
    b = grid[flips + 1].copy()
    za = zv[flips].copy()
    for _ in range(33):
        mid = 0.5 * (a + b)
        zm = rs_z(mid)
        left = np.sign(zm) == np.sign(za)
        a = np.where(left, mid, a)
        za = np.where(left, zm, za)
        b = np.where(left, b, mid)
    return 0.5 * (a + b)


def main() -> int:
    import mpmath as mp

    t0 = time.time()
    data_dir = REPO / "data"
    data_dir.mkdir(exist_ok=True)

    # -- anchor zeros from mpmath ------------------------------------
    mp.mp.dps = 30
    print(f"computing first {ANCHOR} ordinates with mpmath ...", flush=True)
    anchor = [float(mp.zetazero(n).imag) for n in range(1, ANCHOR + 1)]
    print(f"  done in {time.time() - t0:.1f}s (last: {anchor[-1]:.6f})")

    hundred = [
        ZeroRecord(ordinate=g, source="computed", tolerance=1e-12)
        for g in anchor[:100]
    ]
    save_zero_table(hundred, data_dir / "riemann_zeros_0100.txt", precision=1e-12)
    print("wrote riemann_zeros_0100.txt")

    # -- Riemann-Siegel scan for the rest ------------------------------
    # Start halfway between the last anchor and its successor.
    g_next = float(mp.zetazero(ANCHOR + 1).imag)
    t_lo = 0.5 * (anchor[-1] + g_next)
    g_last = float(mp.zetazero(TOTAL).imag)
    t_hi = g_last + 2.0
    print(f"scanning Z(t) on [{t_lo:.3f}, {t_hi:.3f}] at step {SCAN_STEP} ...")
    scanned = scan_zeros(t_lo, t_hi)
    ordinates = np.concatenate([np.array(anchor), scanned])

    # -- validation -----------------------------------------------------
    diffs = np.diff(ordinates)
    assert np.all(diffs > 0.0), "ordinates not strictly increasing"
    print(f"  {len(scanned)} scanned zeros, min gap {diffs.min():.4f}")

    count_pred = (float(theta(np.array([t_hi]))[0]) - float(theta(np.array([t_lo]))[0])) / math.pi
    drift = abs(len(scanned) - count_pred)
    print(f"  count check: scanned {len(scanned)} vs integral {count_pred:.2f} "
          f"(drift {drift:.2f})")
    assert drift < 2.0, "zero count disagrees with the counting integral"

    mp.mp.dps = 20
    worst = 0.0
    for n in SPOT_INDICES:
        ref = float(mp.zetazero(n).imag)
        got = float(ordinates[n - 1])
        err = abs(got - ref)
        worst = max(worst, err)
        print(f"  spot n={n}: table {got:.6f} vs mpmath {ref:.6f} (err {err:.2e})")
        assert err < RS_PRECISION, f"zero {n} off by {err:.2e}"
    print(f"  worst spot error {worst:.2e} < {RS_PRECISION}")

    final = ordinates[:TOTAL]
    assert len(final) == TOTAL, f"expected {TOTAL} zeros, have {len(final)}"
    records = []
    for i, g in enumerate(final):
        tol = 1e-12 if i < ANCHOR else RS_PRECISION
        records.append(ZeroRecord(ordinate=float(g), source="computed", tolerance=tol))
    save_zero_table(records, data_dir / "riemann_zeros_10k.txt", precision=RS_PRECISION)
    print(f"wrote riemann_zeros_10k.txt ({TOTAL} zeros, {time.time() - t0:.1f}s total)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
