"""Log-polar complex values and series error records.

On the critical line the completed xi functions decay like exp(-pi*t/4):
at t = 1000 the magnitude is around exp(-773), far below the smallest
positive double.  Every quantity that can reach that regime is therefore
carried as (log magnitude, phase) and only converted to an ordinary
complex number after rescaling.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

_TWO_PI = 2.0 * math.pi

# exp() overflows just above this; used to guard to_complex().
_LOG_HUGE = 709.0


def wrap_phase(phi: float) -> float:
    """Reduce a phase to the principal interval (-pi, pi]."""
    r = math.remainder(phi, _TWO_PI)
    if r <= -math.pi:
        r += _TWO_PI
    return r


@dataclass(frozen=True)
class LogPolarComplex:
    """A complex value stored as log|z| and arg(z).

    ``is_zero`` marks values that are numerically indistinguishable from
    zero (magnitude below the evaluation's own error bound); for such
    values ``log_mag`` and ``phase`` are present but unreliable.
    """

    log_mag: float
    phase: float
    is_zero: bool = False

    @staticmethod
    def from_complex(z: complex) -> "LogPolarComplex":
        if z == 0:
            return LogPolarComplex(-math.inf, 0.0, True)
        try:
            phase = cmath.phase(z)
        except OverflowError:
            # atan2 underflowed to a subnormal (|imag/real| < ~1e-308) and
            # CPython reports that as a range error; the phase is 0 or pi
            # to well below double precision.
            phase = 0.0 if z.real > 0.0 else math.pi
        return LogPolarComplex(math.log(abs(z)), phase)

    @staticmethod
    def from_parts(log_mag: float, phase: float) -> "LogPolarComplex":
        """Build from raw parts, normalising the phase."""
        return LogPolarComplex(log_mag, wrap_phase(phase))

    def __mul__(self, other: "LogPolarComplex") -> "LogPolarComplex":
        if self.is_zero or other.is_zero:
            return LogPolarComplex(-math.inf, 0.0, True)
        return LogPolarComplex(
            self.log_mag + other.log_mag,
            wrap_phase(self.phase + other.phase),
        )

    def __truediv__(self, other: "LogPolarComplex") -> "LogPolarComplex":
        if other.is_zero:
            raise ZeroDivisionError("division by a numerically-zero log-polar value")
        if self.is_zero:
            return LogPolarComplex(-math.inf, 0.0, True)
        return LogPolarComplex(
            self.log_mag - other.log_mag,
            wrap_phase(self.phase - other.phase),
        )

    def __neg__(self) -> "LogPolarComplex":
        if self.is_zero:
            return self
        return LogPolarComplex(self.log_mag, wrap_phase(self.phase + math.pi), False)

    def conjugate(self) -> "LogPolarComplex":
        return LogPolarComplex(self.log_mag, wrap_phase(-self.phase), self.is_zero)

    def rotated(self, dphi: float) -> "LogPolarComplex":
        """Multiply by the unit complex number exp(i*dphi)."""
        return LogPolarComplex(self.log_mag, wrap_phase(self.phase + dphi), self.is_zero)

    def scaled(self, log_scale: float) -> "LogPolarComplex":
        """Multiply the magnitude by exp(log_scale)."""
        if self.is_zero:
            return self
        return LogPolarComplex(self.log_mag + log_scale, self.phase, False)

    def to_complex(self, log_shift: float = 0.0) -> complex:
        """Return exp(log_mag - log_shift) * exp(i*phase) as a complex double.

        The shift lets callers renormalise a batch of values by a common
        magnitude before leaving the log domain.  Values whose shifted
        magnitude still overflows raise OverflowError rather than returning
        inf silently.
        """
        if self.is_zero:
            return 0j
        lm = self.log_mag - log_shift
        if lm > _LOG_HUGE:
            raise OverflowError(f"log magnitude {lm:.3g} exceeds double range")
        return cmath.rect(math.exp(lm) if lm > -745.0 else 0.0, self.phase)

    @property
    def real_sign(self) -> int:
        """Sign of the real part (0 for a numerically-zero value)."""
        if self.is_zero:
            return 0
        c = math.cos(self.phase)
        if c > 0.0:
            return 1
        if c < 0.0:
            return -1
        return 0


@dataclass(frozen=True)
class SeriesError:
    """Error record attached to a truncated-series evaluation.

    ``truncation_terms`` is the number of main-sum terms actually used,
    ``estimated_abs_error`` bounds the combined truncation and rounding
    error of the returned value, and ``estimated_rel_error`` is that bound
    divided by the magnitude of the value (inf when the value vanished).
    """

    truncation_terms: int
    estimated_abs_error: float
    estimated_rel_error: float
