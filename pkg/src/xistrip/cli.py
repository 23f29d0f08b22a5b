"""Command line front end: subcommands, CSV emission, exit codes.

Exit code contract: 0 for a clean run, 2 when a scan or check finds
violations (or a zero scan flags suspects), 1 for usage errors and
evaluation failures.  Standard output carries tables and ``key=value``
summary lines; CSV files are written with fixed headers and numbers at
twelve significant digits, so identical inputs give identical bytes
regardless of the worker count.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .characters import character, character_group
from .checks import ScanGrid, scan_maxmin, scan_monotonicity, scan_sign_law
from .kernels import BACKEND
from .momentum import ProductField
from .rsz import completed_ratio, error_envelope, rsz_eval
from .xi import ImprimitiveCharacterError, StripPoint, field_for
from .zeros import (
    ZeroTableFormatError,
    default_zero_table_path,
    find_zeros,
    ingest_zero_table,
    save_zero_table,
)

_MAX_PRINTED_VIOLATIONS = 20


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this front end reserves 2 for findings."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _g(x) -> str:
    """Fixed 12-significant-digit rendering used for every CSV number."""
    return f"{float(x):.12g}"


def _emit(pairs) -> None:
    for key, value in pairs:
        print(f"{key}={value}")


def _write_csv(path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _field_from_args(args):
    modulus = getattr(args, "modulus", None)
    index = getattr(args, "index", None)
    if (modulus is None) != (index is None):
        raise ValueError("--modulus and --index must be given together")
    if modulus is None:
        return field_for(None)
    return field_for(character(modulus, index))


def _progress_printer(label: str):
    if not sys.stderr.isatty():
        return None

    def callback(done: int, total: int) -> None:
        print(f"\r{label}: {done}/{total}", end="", file=sys.stderr, flush=True)
        if done == total:
            print(file=sys.stderr)

    return callback


# ----------------------------------------------------------------- characters


def _angle_text(angle) -> str:
    """Exact rendering of a root of unity from its angle in turns."""
    if angle is None:
        return "0"
    named = {(0, 1): "1", (1, 2): "-1", (1, 4): "i", (3, 4): "-i"}
    key = (angle.numerator, angle.denominator)
    return named.get(key, f"e({angle})")


def cmd_characters(args) -> int:
    group = character_group(args.modulus)
    print("index parity conductor primitive order values")
    for chi in group:
        values = ";".join(_angle_text(a) for a in chi.angles)
        print(
            f"{chi.index} {chi.parity} {chi.conductor} "
            f"{1 if chi.is_primitive else 0} {chi.order} {values}"
        )
    _emit(
        [
            ("modulus", args.modulus),
            ("count", len(group)),
            ("primitive", sum(1 for chi in group if chi.is_primitive)),
        ]
    )
    return 0


# ------------------------------------------------------------------------- xi


def cmd_xi(args) -> int:
    field_obj = _field_from_args(args)
    ev = field_obj.eval(StripPoint(args.t, args.eps))
    pairs = [
        ("function", field_obj.label),
        ("t", _g(args.t)),
        ("eps", _g(args.eps)),
        ("log_mag", _g(ev.value.log_mag)),
        ("phase", _g(ev.value.phase)),
        ("is_zero", 1 if ev.value.is_zero else 0),
        ("est_rel_error", _g(ev.series_error.estimated_rel_error)),
        ("series_terms", ev.series_error.truncation_terms),
    ]
    try:
        z = ev.value.to_complex()
    except OverflowError:
        z = None
    if z is not None:
        pairs.append(("value_re", _g(z.real)))
        pairs.append(("value_im", _g(z.imag)))
    _emit(pairs)
    return 0


# ---------------------------------------------------------------------- zeros


def cmd_zeros(args) -> int:
    field_obj = _field_from_args(args)
    scan = find_zeros(args.t_min, args.t_max, field_obj, step=args.step)
    for message in scan.warnings:
        print(f"warning: {message}", file=sys.stderr)
    if args.out is not None:
        save_zero_table(scan.records, args.out)
    else:
        for record in scan.records:
            print(f"zero={record.ordinate:.12f}")
    for suspect in scan.suspects:
        print(f"suspect={suspect:.6f}")
    pairs = [
        ("function", field_obj.label),
        ("t_min", _g(args.t_min)),
        ("t_max", _g(args.t_max)),
        ("zeros", len(scan.records)),
        ("suspects", len(scan.suspects)),
        ("warnings", len(scan.warnings)),
    ]
    if args.out is not None:
        pairs.append(("out", args.out))
    _emit(pairs)
    return 2 if scan.suspects else 0


def cmd_zeros_ingest(args) -> int:
    records = ingest_zero_table(args.file)
    pairs = [("file", args.file), ("count", len(records))]
    if records:
        pairs.append(("t_min", _g(records[0].ordinate)))
        pairs.append(("t_max", _g(records[-1].ordinate)))
        pairs.append(("precision", _g(records[0].tolerance)))
        if records[0].character is not None:
            q, k = records[0].character
            pairs.append(("modulus", q))
            pairs.append(("index", k))
    _emit(pairs)
    return 0


# ----------------------------------------------------------------------- scan


def _table_records(args):
    if args.zero_table is not None:
        path = Path(args.zero_table)
    else:
        try:
            path = default_zero_table_path()
        except FileNotFoundError:
            return None
    return ingest_zero_table(path)


def _exclusion_ordinates(args, chi):
    """Zero ordinates for exclusion disks, or None to locate them by scan.

    An explicit --zero-table must describe the same character family as
    the scanned function; the bundled default table only applies to the
    Riemann case.
    """
    records = _table_records(args)
    if records is None:
        return None
    expected = None if chi is None else (chi.modulus, chi.index)
    for record in records:
        if record.character != expected:
            raise ValueError(
                f"zero table character {record.character} does not match "
                f"the scanned function {expected}"
            )
    if chi is not None and args.zero_table is None:
        return None  # no bundled Dirichlet tables: locate zeros directly
    return np.asarray([record.ordinate for record in records], dtype=np.float64)


def cmd_scan(args) -> int:
    grid = ScanGrid(
        t_min=args.t_min,
        t_max=args.t_max,
        t_steps=args.t_steps,
        eps_max=args.eps_max,
        eps_steps=args.eps_steps,
        exclusion_radius=args.exclusion_radius,
    )
    injected = args.inject_zero or []
    if injected:
        if args.modulus is not None or args.index is not None:
            raise ValueError(
                "--inject-zero builds a synthetic Riemann-table field; "
                "it cannot be combined with --modulus/--index"
            )
        records = _table_records(args)
        if records is None:
            raise ValueError("--inject-zero needs a zero table (bundled or --zero-table)")
        ordinates = [record.ordinate for record in records]
        field_obj = ProductField.from_ordinates(ordinates, extra=injected)
        zero_ords = np.asarray(ordinates, dtype=np.float64)
    else:
        field_obj = _field_from_args(args)
        chi = getattr(field_obj, "character", None)
        zero_ords = _exclusion_ordinates(args, chi)

    runner = scan_sign_law if args.mode == "sign" else scan_monotonicity
    report = runner(
        field_obj,
        grid,
        zero_ordinates=zero_ords,
        workers=args.parallelism,
        progress=_progress_printer(f"scan {args.mode}"),
    )

    header = ["t", "eps", "l_hat", "dlogmag_deps", "est_error", "flag", "ok"]
    rows = [
        [
            _g(r.t),
            _g(r.eps),
            _g(r.l_hat),
            _g(r.dlogmag_deps),
            _g(r.est_error),
            r.flag,
            "1" if r.flag == "ok" else "0",
        ]
        for r in report.rows
    ]
    _write_csv(args.out, header, rows)

    pairs = list(report.summary().items())
    pairs.append(("backend", BACKEND))
    pairs.append(("out", args.out))
    _emit(pairs)
    for v in report.violations[:_MAX_PRINTED_VIOLATIONS]:
        print(f"violation=t:{v.t:.6f},eps:{v.eps:+.4f},{v.quantity}:{v.value:.6g}")
    hidden = len(report.violations) - _MAX_PRINTED_VIOLATIONS
    if hidden > 0:
        print(f"violations_not_printed={hidden}")
    for message in report.internal_errors:
        print(f"internal_error: {message}", file=sys.stderr)
    if report.violations:
        return 2
    return 1 if report.internal_errors else 0


# -------------------------------------------------------------- check maxmin


def cmd_check_maxmin(args) -> int:
    field_obj = _field_from_args(args)
    report = scan_maxmin(field_obj, args.t_min, args.t_max, step=args.step)
    header = [
        "t", "kind", "eta_sign", "eta_log_mag", "ddeps",
        "sign_ok", "ddeps_ok", "ok",
    ]
    rows = [
        [
            _g(e.t),
            e.kind,
            str(e.eta_sign),
            _g(e.eta_log_mag),
            _g(e.ddeps),
            "1" if e.sign_ok else "0",
            "1" if e.ddeps_ok else "0",
            "1" if (e.sign_ok and e.ddeps_ok) else "0",
        ]
        for e in report.extrema
    ]
    _write_csv(args.out, header, rows)
    pairs = list(report.summary().items())
    pairs.append(("out", args.out))
    _emit(pairs)
    for v in report.violations[:_MAX_PRINTED_VIOLATIONS]:
        print(f"violation=t:{v.t:.6f},{v.quantity}")
    for message in report.internal_errors:
        print(f"internal_error: {message}", file=sys.stderr)
    if report.violations:
        return 2
    return 1 if report.internal_errors else 0


# ------------------------------------------------------------------------ rsz


def cmd_rsz(args) -> int:
    z, terms = rsz_eval(args.t, args.eps)
    pairs = [
        ("t", _g(args.t)),
        ("eps", _g(args.eps)),
        ("n_terms", terms.n_terms),
        ("p", _g(terms.p)),
        ("cosh_sum", _g(terms.cosh_sum)),
        ("sinh_sum", _g(terms.sinh_sum)),
        ("r0", _g(terms.r0)),
        ("log_f", _g(terms.log_f)),
        ("z_re", _g(z.real)),
        ("z_im", _g(z.imag)),
        ("z2", _g(abs(z) ** 2)),
    ]
    within = True
    if args.t <= 1000.0:
        ref = completed_ratio(args.t, args.eps)
        diff = abs(z - ref)
        envelope = error_envelope(args.t)
        within = diff <= envelope
        pairs += [
            ("ref_re", _g(ref.real)),
            ("ref_im", _g(ref.imag)),
            ("abs_diff", _g(diff)),
            ("envelope", _g(envelope)),
            ("within_envelope", 1 if within else 0),
        ]
    _emit(pairs)
    return 0 if within else 2


# -------------------------------------------------------------------- figure1


def cmd_figure1(args) -> int:
    eps_grid = np.linspace(0.0, 0.5, args.eps_steps)
    rows = []
    for t in args.t_list:
        for eps in eps_grid:
            z, _ = rsz_eval(t, float(eps))
            rows.append([_g(t), _g(eps), _g(abs(z) ** 2)])
    _write_csv(args.out, ["t", "eps", "z2"], rows)
    _emit(
        [
            ("curves", len(args.t_list)),
            ("eps_steps", args.eps_steps),
            ("rows", len(rows)),
            ("out", args.out),
        ]
    )
    return 0


# --------------------------------------------------------------------- parser


def _parse_injected_zero(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected BETA,GAMMA")
    return complex(float(parts[0]), float(parts[1]))


def _parse_t_list(text: str) -> list[float]:
    values = [float(part) for part in text.split(",") if part.strip()]
    if not values:
        raise ValueError("empty t list")
    return values


def _add_character_flags(parser) -> None:
    parser.add_argument("--modulus", type=int, default=None,
                        help="Dirichlet modulus (requires --index)")
    parser.add_argument("--index", type=int, default=None,
                        help="character index within the modulus")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xistrip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("characters", help="list the character group of a modulus")
    p.add_argument("--modulus", type=int, required=True)
    p.set_defaults(handler=cmd_characters)

    p = sub.add_parser("xi", help="evaluate the completed function at one point")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    _add_character_flags(p)
    p.set_defaults(handler=cmd_xi)

    p = sub.add_parser("zeros", help="locate critical-line zeros on a t range")
    zsub = p.add_subparsers(dest="zeros_command", metavar="ingest")
    pi = zsub.add_parser("ingest", help="parse and summarise a zero table file")
    pi.add_argument("file")
    pi.set_defaults(handler=cmd_zeros_ingest)
    p.add_argument("--t-min", type=float, default=None)
    p.add_argument("--t-max", type=float, default=None)
    p.add_argument("--step", type=float, default=0.02)
    p.add_argument("--out", default=None, help="write a zero table instead of stdout")
    _add_character_flags(p)
    p.set_defaults(handler=cmd_zeros)

    p = sub.add_parser("scan", help="grid scans of the strip predicates")
    ssub = p.add_subparsers(dest="mode", required=True, metavar="sign|monotone")
    for mode, help_text in (
        ("sign", "sign(l_hat) must match sign(eps)"),
        ("monotone", "d log|xi| / d eps must match sign(eps)"),
    ):
        ps = ssub.add_parser(mode, help=help_text)
        ps.add_argument("--t-min", type=float, required=True)
        ps.add_argument("--t-max", type=float, required=True)
        ps.add_argument("--t-steps", type=int, default=200)
        ps.add_argument("--eps-max", type=float, default=0.45)
        ps.add_argument("--eps-steps", type=int, default=19)
        ps.add_argument("--exclusion-radius", type=float, default=0.05)
        ps.add_argument("--zero-table", default=None,
                        help="zero table for exclusion disks (default: bundled "
                             "Riemann table or XI_ZERO_TABLE)")
        ps.add_argument("--inject-zero", type=_parse_injected_zero,
                        action="append", default=None, metavar="BETA,GAMMA",
                        help="diagnostic: scan a synthetic zero-product field "
                             "with an extra zero at beta + i gamma")
        ps.add_argument("--parallelism", type=int, default=1)
        ps.add_argument("--out", required=True, help="CSV output path")
        _add_character_flags(ps)
        ps.set_defaults(handler=cmd_scan, mode=mode)

    p = sub.add_parser("check", help="located-feature checks")
    csub = p.add_subparsers(dest="check_command", required=True, metavar="maxmin")
    pc = csub.add_parser("maxmin", help="eta extremum signs and momentum slope")
    pc.add_argument("--t-min", type=float, required=True)
    pc.add_argument("--t-max", type=float, required=True)
    pc.add_argument("--step", type=float, default=0.02)
    pc.add_argument("--out", required=True, help="CSV output path")
    _add_character_flags(pc)
    pc.set_defaults(handler=cmd_check_maxmin)

    p = sub.add_parser("rsz", help="hyperbolic main-sum evaluation of Z(t, eps)")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--eps", type=float, default=0.0)
    p.set_defaults(handler=cmd_rsz)

    p = sub.add_parser("figure1", help="emit |Z(t, eps)|^2 curves as CSV")
    p.add_argument("--t-list", type=_parse_t_list, default=[100.0, 200.0, 500.0],
                   metavar="T1,T2,...")
    p.add_argument("--eps-steps", type=int, default=51)
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(handler=cmd_figure1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "zeros" and getattr(args, "zeros_command", None) is None:
        if args.t_min is None or args.t_max is None:
            print("xistrip zeros: error: --t-min and --t-max are required",
                  file=sys.stderr)
            return 1
    try:
        return args.handler(args)
    except (
        ValueError,
        ArithmeticError,
        OSError,
        ZeroTableFormatError,
        ImprimitiveCharacterError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
