"""Numerics for completed zeta and Dirichlet xi functions on the critical strip.

The package evaluates the completed functions in log-polar form (they decay
like exp(-pi*t/4), far below double-precision range), differentiates their
phase along the critical strip, and runs the sign-law, monotonicity,
zero-sum and max/min checks that encode the Riemann hypothesis and its
Dirichlet generalisation as falsifiable numerical predicates.
"""

from .characters import (
    DirichletCharacter,
    character,
    character_group,
    conductor,
    gauss_sum,
    primitive_characters,
)
from .checks import (
    Extremum,
    GridRow,
    ScanGrid,
    ScanReport,
    Violation,
    compare_reports,
    scan_maxmin,
    scan_monotonicity,
    scan_sign_law,
)
from .logpolar import LogPolarComplex, SeriesError, wrap_phase
from .momentum import (
    AtZeroError,
    MomentumSample,
    ProductField,
    ZeroSumConfig,
    ddeps_momentum_on_line,
    momentum_sample,
    zero_sum_lhat,
    zero_sum_tail_bound,
)
from .rsz import RszTerms, completed_ratio, error_envelope, rsz_eval
from .specfun import (
    LogGammaPoleError,
    SeriesConvergenceError,
    ZetaPoleError,
    hurwitz_zeta,
    log_gamma,
    zeta_em,
)
from .xi import (
    DirichletXi,
    ImprimitiveCharacterError,
    RiemannXi,
    StripPoint,
    XiEvaluation,
    field_for,
)
from .zeros import (
    ZeroRecord,
    ZeroScan,
    ZeroTableFormatError,
    default_zero_table_path,
    find_zeros,
    ingest_zero_table,
    save_zero_table,
)

__version__ = "0.1.0"

__all__ = [
    "AtZeroError",
    "DirichletCharacter",
    "DirichletXi",
    "Extremum",
    "GridRow",
    "ImprimitiveCharacterError",
    "LogGammaPoleError",
    "LogPolarComplex",
    "MomentumSample",
    "ProductField",
    "RiemannXi",
    "RszTerms",
    "ScanGrid",
    "ScanReport",
    "SeriesConvergenceError",
    "SeriesError",
    "StripPoint",
    "Violation",
    "XiEvaluation",
    "ZeroRecord",
    "ZeroScan",
    "ZeroSumConfig",
    "ZeroTableFormatError",
    "ZetaPoleError",
    "character",
    "character_group",
    "compare_reports",
    "completed_ratio",
    "conductor",
    "ddeps_momentum_on_line",
    "default_zero_table_path",
    "error_envelope",
    "field_for",
    "find_zeros",
    "gauss_sum",
    "hurwitz_zeta",
    "ingest_zero_table",
    "log_gamma",
    "momentum_sample",
    "primitive_characters",
    "rsz_eval",
    "save_zero_table",
    "scan_maxmin",
    "scan_monotonicity",
    "scan_sign_law",
    "wrap_phase",
    "zero_sum_lhat",
    "zero_sum_tail_bound",
    "zeta_em",
    "__version__",
]
