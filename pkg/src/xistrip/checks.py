"""Grid scans for the critical-line predicates.

Three checks, each phrased so a hypothesis failure becomes a reported
violation rather than an assertion crash:

* sign law      -- sign(l_hat) must equal sign(eps) away from zeros;
* monotonicity  -- sign(d log|xi| / d eps) must equal sign(eps) likewise;
* max/min       -- on the line, eta must be positive at its local maxima
                   and negative at its local minima.

The first two are the Cauchy-Riemann halves of one statement and must
flag the *same* grid points; `compare_reports` enforces that.  The third
is checked by two routes as well (the sign of eta at the extremum, and
the sign of the eps-derivative of the momentum there), and disagreement
between routes is reported as an internal error, never silently resolved.

Grid points inside a small disk around each located zero are excluded
from the sign checks: the phase is genuinely undefined at a zero, and the
finite-difference machinery would only report noise there.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass, field

import numpy as np

from .logpolar import LogPolarComplex
from .momentum import AtZeroError, ddeps_momentum_on_line, momentum_sample
from .xi import StripPoint
from .zeros import find_zeros

__all__ = [
    "ScanGrid",
    "GridRow",
    "Violation",
    "Extremum",
    "ScanReport",
    "scan_sign_law",
    "scan_monotonicity",
    "scan_maxmin",
    "compare_reports",
]

# A measured quantity below this (absolute, after the error-scaled floor)
# cannot witness a sign either way.
_SIGN_FLOOR = 1e-9
_ERROR_FACTOR = 10.0
_ZERO_ROW_FACTOR = 50.0
_ZERO_ROW_FLOOR = 1e-6


@dataclass(frozen=True)
class ScanGrid:
    """A rectangular (t, eps) grid with zero-exclusion disks.

    ``eps_steps`` must be odd so the grid is symmetric about eps = 0 and
    contains the line itself; the eps = 0 row is checked for vanishing
    rather than for sign.
    """

    t_min: float
    t_max: float
    t_steps: int
    eps_max: float = 0.45
    eps_steps: int = 19
    exclusion_radius: float = 0.05

    def __post_init__(self):
        if self.t_max <= self.t_min:
            raise ValueError("empty t range")
        if self.t_steps < 2:
            raise ValueError("need at least two t samples")
        if not 0.0 < self.eps_max <= 0.5:
            raise ValueError("eps_max must lie in (0, 1/2]")
        if self.eps_steps < 3 or self.eps_steps % 2 == 0:
            raise ValueError("eps_steps must be odd and at least 3")
        if self.exclusion_radius < 0.0:
            raise ValueError("negative exclusion radius")

    def t_values(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.t_steps)

    def eps_values(self) -> np.ndarray:
        return np.linspace(-self.eps_max, self.eps_max, self.eps_steps)


@dataclass(frozen=True)
class GridRow:
    """One evaluated grid point, as written to scan CSV output."""

    t: float
    eps: float
    l_hat: float
    dlogmag_deps: float
    est_error: float
    flag: str  # ok | violation | excluded | at-zero | error


@dataclass(frozen=True)
class Violation:
    t: float
    eps: float
    quantity: str
    value: float
    est_error: float


@dataclass(frozen=True)
class Extremum:
    """A located extremum of eta on the line, with both check routes."""

    t: float
    kind: str  # max | min
    eta_sign: int
    eta_log_mag: float
    ddeps: float
    sign_ok: bool
    ddeps_ok: bool

    @property
    def routes_agree(self) -> bool:
        return self.sign_ok == self.ddeps_ok


@dataclass
class ScanReport:
    """Everything a scan produced, in deterministic order."""

    check: str
    label: str
    rows: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    extrema: list = field(default_factory=list)
    internal_errors: list = field(default_factory=list)
    excluded: int = 0
    zero_ordinates: np.ndarray | None = None

    def summary(self) -> dict:
        out = {
            "check": self.check,
            "function": self.label,
            "points": len(self.rows),
            "excluded": self.excluded,
            "violations": len(self.violations),
            "internal_errors": len(self.internal_errors),
        }
        if self.extrema:
            out["extrema"] = len(self.extrema)
        return out

    @property
    def clean(self) -> bool:
        return not self.violations and not self.internal_errors


def _locate_exclusion_zeros(field_obj, grid: ScanGrid) -> np.ndarray:
    lo = max(0.0, grid.t_min - grid.exclusion_radius - 0.05)
    hi = grid.t_max + grid.exclusion_radius + 0.05
    scan = find_zeros(lo, hi, field_obj, step=0.02)
    return scan.ordinates()


def _classify(quantity: str, value: float, est: float, eps: float) -> str:
    """ok / violation decision for one measured derivative."""
    if eps == 0.0:
        tol = max(_ZERO_ROW_FACTOR * est, _ZERO_ROW_FLOOR)
        return "ok" if abs(value) <= tol else "violation"
    floor = max(_ERROR_FACTOR * est, _SIGN_FLOOR)
    if abs(value) <= floor:
        return "ok"  # below noise: witnesses nothing
    return "ok" if math.copysign(1.0, value) == math.copysign(1.0, eps) else "violation"


def _scan_line(args) -> list[GridRow]:
    """Evaluate one t-line of the grid (multiprocessing task)."""
    field_obj, t, eps_values, ordinates, radius, quantity = args
    rows: list[GridRow] = []
    r2 = radius * radius
    for eps in eps_values:
        if ordinates.size:
            d = ordinates - t
            if np.any(d * d + eps * eps <= r2):
                rows.append(GridRow(t, eps, math.nan, math.nan, math.nan, "excluded"))
                continue
        try:
            s = momentum_sample(field_obj, StripPoint(t, eps))
        except AtZeroError:
            rows.append(GridRow(t, eps, math.nan, math.nan, math.nan, "at-zero"))
            continue
        except ArithmeticError:
            rows.append(GridRow(t, eps, math.nan, math.nan, math.nan, "error"))
            continue
        value, est = (
            (s.l_hat, s.est_error_t)
            if quantity == "l_hat"
            else (s.dlogmag_deps, s.est_error_eps)
        )
        flag = _classify(quantity, value, est, eps)
        rows.append(GridRow(t, eps, s.l_hat, s.dlogmag_deps, s.est_error, flag))
    return rows


def _run_scan(
    field_obj,
    grid: ScanGrid,
    quantity: str,
    check: str,
    zero_ordinates=None,
    workers: int = 1,
    progress=None,
) -> ScanReport:
    if zero_ordinates is None:
        ordinates = _locate_exclusion_zeros(field_obj, grid)
    else:
        ordinates = np.asarray(zero_ordinates, dtype=np.float64)
    eps_values = grid.eps_values()
    tasks = [
        (field_obj, float(t), eps_values, ordinates, grid.exclusion_radius, quantity)
        for t in grid.t_values()
    ]
    per_line: list[list[GridRow]] = []
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            for i, line in enumerate(pool.imap(_scan_line, tasks, chunksize=1)):
                per_line.append(line)
                if progress is not None:
                    progress(i + 1, len(tasks))
    else:
        for i, task in enumerate(tasks):
            per_line.append(_scan_line(task))
            if progress is not None:
                progress(i + 1, len(tasks))

    report = ScanReport(check=check, label=field_obj.label, zero_ordinates=ordinates)
    for line in per_line:
        for row in line:
            report.rows.append(row)
            if row.flag == "excluded":
                report.excluded += 1
            elif row.flag == "violation":
                value = row.l_hat if quantity == "l_hat" else row.dlogmag_deps
                report.violations.append(
                    Violation(row.t, row.eps, quantity, value, row.est_error)
                )
            elif row.flag in ("at-zero", "error"):
                report.internal_errors.append(
                    f"{row.flag} at (t={row.t:g}, eps={row.eps:g})"
                )
    return report


def scan_sign_law(field_obj, grid: ScanGrid, zero_ordinates=None,
                  workers: int = 1, progress=None) -> ScanReport:
    """Check sign(l_hat) = sign(eps) over the grid, outside zero disks."""
    return _run_scan(
        field_obj, grid, "l_hat", "sign_law", zero_ordinates, workers, progress
    )


def scan_monotonicity(field_obj, grid: ScanGrid, zero_ordinates=None,
                      workers: int = 1, progress=None) -> ScanReport:
    """Check sign(d log|xi| / d eps) = sign(eps): |xi| must grow away from the line."""
    return _run_scan(
        field_obj, grid, "dlogmag_deps", "monotonicity", zero_ordinates, workers,
        progress,
    )


def compare_reports(a: ScanReport, b: ScanReport) -> list[str]:
    """Mismatched violation sets between the two scan routes.

    The sign law and the monotonicity check measure the same analytic
    quantity through the two Cauchy-Riemann components, so on a shared
    grid their violation point sets must coincide exactly.
    """
    pa = {(v.t, v.eps) for v in a.violations}
    pb = {(v.t, v.eps) for v in b.violations}
    problems = []
    for t, eps in sorted(pa - pb):
        problems.append(f"({t:g}, {eps:g}) flagged by {a.check} only")
    for t, eps in sorted(pb - pa):
        problems.append(f"({t:g}, {eps:g}) flagged by {b.check} only")
    return problems


# ---------------------------------------------------------------------
# Max/min criterion on the critical line
# ---------------------------------------------------------------------


def _signed_delta(a: LogPolarComplex, b: LogPolarComplex) -> float:
    """Sign-carrying difference eta(b) - eta(a), rescaled to stay finite."""
    m = max(a.log_mag, b.log_mag)
    if m == -math.inf:
        return 0.0
    ya = math.cos(a.phase) * math.exp(a.log_mag - m)
    yb = math.cos(b.phase) * math.exp(b.log_mag - m)
    return yb - ya


def _refine_extremum(field_obj, lo: float, hi: float, rising: bool) -> float:
    """Bisect the sign change of eta' inside [lo, hi]."""
    h = 1e-6 * max(1.0, math.sqrt(0.5 * (lo + hi)))

    def slope(t: float) -> float:
        return _signed_delta(
            field_obj.eta(StripPoint(t - h, 0.0)), field_obj.eta(StripPoint(t + h, 0.0))
        )

    a, b = lo, hi
    fa = slope(a)
    for _ in range(40):
        if b - a < 1e-7:
            break
        mid = 0.5 * (a + b)
        fm = slope(mid)
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def scan_maxmin(field_obj, t_min: float, t_max: float, step: float = 0.02) -> ScanReport:
    """Locate extrema of eta on [t_min, t_max] and check the max/min law.

    Route one: eta must be positive at every local maximum and negative
    at every local minimum.  Route two: the eps-derivative of the
    momentum, evaluated at the extremum, must be positive.  Each
    extremum records both verdicts; disagreements become internal errors
    and either route failing files a violation.
    """
    if t_max <= t_min:
        raise ValueError("empty t range")
    if not 0.0 < step <= 0.05:
        raise ValueError("step must lie in (0, 0.05]")
    n_steps = int(math.ceil((t_max - t_min) / step))
    ts = [t_min + i * step for i in range(n_steps)] + [t_max]
    vals = [field_obj.eta(StripPoint(t, 0.0)) for t in ts]

    report = ScanReport(check="maxmin", label=field_obj.label)
    deltas = [_signed_delta(vals[i], vals[i + 1]) for i in range(len(ts) - 1)]
    for i in range(1, len(deltas)):
        if deltas[i - 1] == 0.0 or deltas[i] == 0.0:
            continue
        rising_before = deltas[i - 1] > 0.0
        rising_after = deltas[i] > 0.0
        if rising_before == rising_after:
            continue
        kind = "max" if rising_before else "min"
        t_ext = _refine_extremum(field_obj, ts[i - 1], ts[i + 1], rising_before)
        v = field_obj.eta(StripPoint(t_ext, 0.0))
        sign = v.real_sign
        sign_ok = (sign > 0) if kind == "max" else (sign < 0)
        try:
            dd = ddeps_momentum_on_line(field_obj, t_ext)
            ddeps_ok = dd > 0.0
        except AtZeroError:
            dd = math.nan
            ddeps_ok = False
        ext = Extremum(
            t=t_ext,
            kind=kind,
            eta_sign=sign,
            eta_log_mag=v.log_mag,
            ddeps=dd,
            sign_ok=sign_ok,
            ddeps_ok=ddeps_ok,
        )
        report.extrema.append(ext)
        if not ext.sign_ok or not ext.ddeps_ok:
            report.violations.append(
                Violation(t_ext, 0.0, "maxmin", float(sign), 0.0)
            )
        if not ext.routes_agree:
            report.internal_errors.append(
                f"max/min routes disagree at t={t_ext:.6f}: "
                f"eta sign {sign} ({kind}), ddeps {dd:g}"
            )

    # Extrema of a function real on the line must alternate.
    for prev, cur in zip(report.extrema, report.extrema[1:]):
        if prev.kind == cur.kind:
            report.internal_errors.append(
                f"consecutive {cur.kind} extrema at t={prev.t:.6f} and "
                f"t={cur.t:.6f}: a zero or extremum was missed at this step"
            )
    return report
