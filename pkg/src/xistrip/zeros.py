"""Critical-line zeros: location by sign change, and table ingest/export.

`find_zeros` walks a grid over [t_min, t_max], watches the sign of the
real-on-the-line companion eta, and refines each sign change by bisection
to an ordinate tolerance of 1e-9.  Magnitude dips that do *not* change
sign are reported as suspects (a close pair or an off-line pair straddling
the line looks exactly like that), never silently dropped and never
promoted to zeros.

Tables use a plain text format: optional ``# key=value`` header lines
(keys ``precision``, ``modulus``, ``index`` are understood), then one
ordinate per line, ascending.  `ingest_zero_table` parses with 1-based
line numbers in every complaint; a non-monotone entry warns and is kept,
a malformed one raises.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .logpolar import LogPolarComplex
from .xi import StripPoint

__all__ = [
    "ZeroRecord",
    "ZeroScan",
    "ZeroTableFormatError",
    "find_zeros",
    "ingest_zero_table",
    "save_zero_table",
    "default_zero_table_path",
]

_BISECTION_TOL = 1e-9
_MAX_STEP = 0.05


class ZeroTableFormatError(ValueError):
    """A zero table line failed to parse; carries the 1-based line number."""

    def __init__(self, path, line_number: int, message: str):
        super().__init__(f"{path}:{line_number}: {message}")
        self.path = str(path)
        self.line_number = line_number


@dataclass(frozen=True)
class ZeroRecord:
    """One located or ingested zero ordinate.

    ``source`` is "computed" for bisection results and "ingested" for
    table rows; ``tolerance`` bounds |recorded - true| as claimed by the
    producer.  ``character`` is (modulus, index) for Dirichlet zeros and
    None for Riemann ones.
    """

    ordinate: float
    source: str
    tolerance: float
    character: tuple[int, int] | None = None


@dataclass
class ZeroScan:
    """Outcome of a grid scan: confirmed zeros plus diagnostics.

    Iterating a ZeroScan iterates its records, so most callers can treat
    it as the list of zeros; ``suspects`` holds grid ordinates where the
    magnitude dipped without a sign change and ``warnings`` collects
    step-resolution complaints (also emitted via `warnings.warn`).
    """

    records: list[ZeroRecord] = field(default_factory=list)
    suspects: list[float] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def ordinates(self) -> np.ndarray:
        return np.array([r.ordinate for r in self.records], dtype=np.float64)


def _eta_sign(field_obj, t: float) -> tuple[int, float]:
    v: LogPolarComplex = field_obj.eta(StripPoint(t, 0.0))
    return v.real_sign, v.log_mag


def _bisect(field_obj, a: float, fa: int, b: float, fb: int) -> ZeroRecord:
    """Refine a sign-change bracket down to the ordinate tolerance."""
    while b - a > 2.0 * _BISECTION_TOL:
        mid = 0.5 * (a + b)
        fm, _ = _eta_sign(field_obj, mid)
        if fm == 0:
            # Numerically dead centre; the bracket cannot shrink further
            # meaningfully, so report the midpoint at current width.
            a, b = mid, mid
            break
        if fm == fa:
            a = mid
        else:
            b = mid
    chi = getattr(field_obj, "character", None)
    ident = (chi.modulus, chi.index) if chi is not None else None
    return ZeroRecord(
        ordinate=0.5 * (a + b),
        source="computed",
        tolerance=max(0.5 * (b - a), _BISECTION_TOL),
        character=ident,
    )


def find_zeros(t_min: float, t_max: float, field_obj, step: float = 0.02) -> ZeroScan:
    """Locate zeros of eta on [t_min, t_max] by sign change plus bisection.

    Requires 0 <= t_min < t_max and step <= 0.05.  The target field must
    have a real eta on the critical line (the two xi families do; for a
    synthetic product field only the suspect machinery is meaningful).
    """
    if t_min < 0.0:
        raise ValueError("find_zeros scans the upper half-line: t_min must be >= 0")
    if t_max <= t_min:
        raise ValueError("empty scan range")
    if not 0.0 < step <= _MAX_STEP:
        raise ValueError(f"step must lie in (0, {_MAX_STEP}]")

    n_steps = int(math.ceil((t_max - t_min) / step))
    ts = [t_min + i * step for i in range(n_steps)] + [t_max]
    signs = []
    mags = []
    for t in ts:
        sg, lm = _eta_sign(field_obj, t)
        signs.append(sg)
        mags.append(lm)

    scan = ZeroScan()
    for i in range(1, len(ts)):
        if signs[i - 1] != 0 and signs[i] != 0 and signs[i] != signs[i - 1]:
            scan.records.append(
                _bisect(field_obj, ts[i - 1], signs[i - 1], ts[i], signs[i])
            )
        elif signs[i] == 0:
            # Grid point numerically at a zero: record it at grid accuracy.
            chi = getattr(field_obj, "character", None)
            ident = (chi.modulus, chi.index) if chi is not None else None
            scan.records.append(
                ZeroRecord(ordinate=ts[i], source="computed", tolerance=step,
                           character=ident)
            )

    # Magnitude dips without sign change: candidate close pairs, double
    # zeros, or off-line pairs.  Compare against the second neighbours
    # (the immediate ones can sit almost as deep in the dip); a genuine
    # double zero lands at least 2 ln 3 ~ 2.2 e-folds down however the
    # grid straddles it, while smooth variation over two steps stays far
    # below the 2.0 cut.  Runs of flagged neighbours collapse to the
    # deepest point.
    dips = []
    for i in range(2, len(ts) - 2):
        window = signs[i - 2 : i + 3]
        if any(sg == 0 for sg in window) or len(set(window)) != 1:
            continue
        if mags[i] > mags[i - 1] or mags[i] > mags[i + 1]:
            continue
        if mags[i] < min(mags[i - 2], mags[i + 2]) - 2.0:
            dips.append(i)
    run: list[int] = []
    for i in dips + [len(ts) + 10]:
        if run and i > run[-1] + 1:
            best = min(run, key=lambda j: mags[j])
            scan.suspects.append(ts[best])
            run = []
        if i < len(ts):
            run.append(i)

    recs = scan.records
    for i in range(1, len(recs)):
        gap = recs[i].ordinate - recs[i - 1].ordinate
        if gap < 2.0 * step:
            msg = (
                f"zeros at t={recs[i-1].ordinate:.6f} and t={recs[i].ordinate:.6f} "
                f"are closer than twice the scan step {step:g}; the scan may "
                "have missed neighbours, rerun with a finer step"
            )
            scan.warnings.append(msg)
            warnings.warn(msg, stacklevel=2)
    return scan


# ---------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------


def ingest_zero_table(path) -> list[ZeroRecord]:
    """Parse a zero table file into records.

    Header lines start with '#'; ``# key=value`` pairs for ``precision``,
    ``modulus`` and ``index`` are honoured (precision defaults to 1e-8).
    Body lines carry one ordinate each.  Malformed lines raise
    `ZeroTableFormatError` with the line number; ordering violations only
    warn, because downstream consumers sort anyway.
    """
    path = Path(path)
    precision = 1e-8
    modulus: int | None = None
    index: int | None = None
    records: list[ZeroRecord] = []
    last = -math.inf
    with open(path, "r", encoding="utf-8") as fh:
        for line_number, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            if text.startswith("#"):
                body = text.lstrip("#").strip()
                if "=" in body:
                    key, _, val = body.partition("=")
                    key = key.strip().lower()
                    val = val.strip()
                    try:
                        if key == "precision":
                            precision = float(val)
                        elif key == "modulus":
                            modulus = int(val)
                        elif key == "index":
                            index = int(val)
                    except ValueError as exc:
                        raise ZeroTableFormatError(
                            path, line_number, f"bad header value {val!r} for {key!r}"
                        ) from exc
                continue
            try:
                ordinate = float(text)
            except ValueError as exc:
                raise ZeroTableFormatError(
                    path, line_number, f"expected an ordinate, got {text!r}"
                ) from exc
            if not math.isfinite(ordinate):
                raise ZeroTableFormatError(path, line_number, "non-finite ordinate")
            if ordinate <= last:
                warnings.warn(
                    f"{path}:{line_number}: ordinate {ordinate!r} out of order",
                    stacklevel=2,
                )
            last = ordinate
            chi = (modulus, index) if modulus is not None and index is not None else None
            records.append(
                ZeroRecord(ordinate=ordinate, source="ingested",
                           tolerance=precision, character=chi)
            )
    return records


def save_zero_table(records, path, precision: float | None = None) -> None:
    """Write records to the table format `ingest_zero_table` reads.

    The header precision defaults to the loosest tolerance among the
    records.  Mixed-character record sets are rejected; mixing tables is
    the caller's problem, not the format's.
    """
    records = list(records)
    path = Path(path)
    characters = {r.character for r in records}
    if len(characters) > 1:
        raise ValueError("records mix different characters; write separate tables")
    if precision is None:
        precision = max((r.tolerance for r in records), default=1e-9)
    lines = ["# xistrip zero table", f"# precision={precision:g}"]
    if records and records[0].character is not None:
        q, idx = records[0].character
        lines.append(f"# modulus={q}")
        lines.append(f"# index={idx}")
    for r in sorted(records, key=lambda r: r.ordinate):
        lines.append(f"{r.ordinate:.12f}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def default_zero_table_path() -> Path:
    """The Riemann table to use when the caller names none.

    The environment variable ``XI_ZERO_TABLE`` wins; otherwise the table
    shipped in the repository's data directory is used.
    """
    env = os.environ.get("XI_ZERO_TABLE")
    if env:
        return Path(env)
    bundled = Path(__file__).resolve().parents[2] / "data" / "riemann_zeros_10k.txt"
    if bundled.exists():
        return bundled
    raise FileNotFoundError(
        "no zero table: set XI_ZERO_TABLE or restore data/riemann_zeros_10k.txt"
    )
