"""Completed xi functions on the critical strip.

Points are parametrised as s = 1/2 + eps + i t, so eps is the signed
distance from the critical line.  Two field objects share one interface:

* `RiemannXi` -- xi(s) = Gamma(s/2 + 1) (s - 1) zeta(s) pi^(-s/2),
  entire, real on the line, invariant under s -> 1 - s.
* `DirichletXi` -- xi(s, chi) = (q/pi)^((s+a)/2) Gamma((s+a)/2) L(s, chi)
  for a primitive non-principal character chi mod q with parity a.

Values live in `LogPolarComplex` throughout: on the line the magnitude
decays like exp(-pi t / 4) and leaves double range near t ~ 2900, well
inside regimes users care about.

`eta` is the rotated companion that is real-valued on the critical line.
For the Riemann field eta = xi already.  For a Dirichlet field the
functional equation constant omega = i^a sqrt(q) / tau(chi) has unit
modulus, and multiplying xi by exp(i arg(omega) / 2) aligns the critical
line with the real axis; the leftover sign freedom is fixed by requiring
eta > 0 at the smallest ordinate where it is safely nonzero, which makes
the choice reproducible across runs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .characters import DirichletCharacter, gauss_sum
from .logpolar import LogPolarComplex, SeriesError, wrap_phase

__all__ = [
    "StripPoint",
    "XiEvaluation",
    "RiemannXi",
    "DirichletXi",
    "ImprimitiveCharacterError",
    "field_for",
]

_LOG_PI = math.log(math.pi)

# Hard ceiling on |t|; a little slack on |eps| lets finite-difference
# stencils straddle the strip edge (xi is entire, so values fractionally
# outside [-1/2, 1/2] are perfectly meaningful).
_T_MAX = 1000.5
_EPS_MAX = 0.55

# Euler-Mascheroni constant, for the Laurent expansion of (s-1) zeta(s).
_EULER_GAMMA = 0.5772156649015329


class ImprimitiveCharacterError(ValueError):
    """DirichletXi requires a primitive non-principal character."""


@dataclass(frozen=True)
class StripPoint:
    """A point s = 1/2 + eps + i t of (a slight thickening of) the strip."""

    t: float
    eps: float

    def __post_init__(self):
        if not (abs(self.t) <= _T_MAX and abs(self.eps) <= _EPS_MAX):
            raise ValueError(
                f"point (t={self.t:g}, eps={self.eps:g}) outside the supported "
                f"region |t| <= {_T_MAX:g}, |eps| <= {_EPS_MAX:g}"
            )

    @property
    def s(self) -> complex:
        return complex(0.5 + self.eps, self.t)


@dataclass(frozen=True)
class XiEvaluation:
    """A completed-function value plus the zeta/L series error behind it.

    ``series_error.estimated_rel_error`` applies to the completed value as
    well: the gamma and power factors are exact to rounding, so the
    relative error of xi equals that of the underlying zeta or L sum.
    """

    point: StripPoint
    value: LogPolarComplex
    series_error: SeriesError


class RiemannXi:
    """The completed Riemann zeta function as a field on the strip."""

    label = "riemann"
    character: DirichletCharacter | None = None

    def eval(self, point: StripPoint) -> XiEvaluation:
        s = point.s
        lg = specfun.log_gamma(0.5 * s + 1.0)
        if abs(s - 1.0) < 1e-8:
            # (s-1) zeta(s) = 1 + gamma (s-1) + O((s-1)^2); the quadratic
            # term is below 1e-16 here.
            log_sz = cmath.log(1.0 + _EULER_GAMMA * (s - 1.0))
            err = SeriesError(0, 1e-15, 1e-15)
            log_mag = lg.real + log_sz.real - 0.5 * (s.real * _LOG_PI)
            phase = lg.imag + log_sz.imag - 0.5 * (s.imag * _LOG_PI)
            return XiEvaluation(point, LogPolarComplex.from_parts(log_mag, phase), err)
        z, err = specfun.zeta_em(s)
        az = abs(z)
        is_zero = az <= err.estimated_abs_error
        log_z = math.log(az) if az > 0.0 else -math.inf
        log_mag = lg.real + math.log(abs(s - 1.0)) + log_z - 0.5 * (s.real * _LOG_PI)
        phase = lg.imag + cmath.phase(s - 1.0) + cmath.phase(z) - 0.5 * (s.imag * _LOG_PI)
        value = LogPolarComplex(log_mag, wrap_phase(phase), is_zero)
        return XiEvaluation(point, value, err)

    def eta_evaluation(self, point: StripPoint) -> XiEvaluation:
        """For the Riemann field eta coincides with xi."""
        return self.eval(point)

    def eta(self, point: StripPoint) -> LogPolarComplex:
        return self.eval(point).value

    def __repr__(self) -> str:
        return "RiemannXi()"


class DirichletXi:
    """The completed Dirichlet L-function of a primitive character."""

    def __init__(self, chi: DirichletCharacter):
        if chi.is_principal or not chi.is_primitive:
            raise ImprimitiveCharacterError(
                f"character (q={chi.modulus}, index={chi.index}) is "
                f"{'principal' if chi.is_principal else 'imprimitive'}; "
                "the completed L-function needs a primitive non-principal character"
            )
        self.character = chi
        self.label = f"dirichlet_q{chi.modulus}_i{chi.index}"
        q = chi.modulus
        residues = [r for r in range(1, q + 1) if math.gcd(r, q) == 1]
        self._offsets = np.array([r / q for r in residues], dtype=np.float64)
        self._chi_values = np.array([chi(r) for r in residues], dtype=np.complex128)
        self._log_q = math.log(q)
        self._alpha = chi.parity
        self._rotation: float | None = None

    # -- evaluation --------------------------------------------------

    def eval(self, point: StripPoint) -> XiEvaluation:
        s = point.s
        q = self.character.modulus
        values, serr = specfun.hurwitz_zeta_multi(s, self._offsets)
        l_sum = complex(np.dot(self._chi_values, values))
        # |chi(r)| = 1, so the combined Hurwitz estimate bounds the sum's
        # error; scale by |q^-s| to refer it to L(s, chi) itself.
        q_scale = math.exp(-s.real * self._log_q)
        abs_err = serr.estimated_abs_error * q_scale
        a_sum = abs(l_sum)
        is_zero = a_sum <= serr.estimated_abs_error
        rel = serr.estimated_abs_error / a_sum if a_sum > 0.0 else math.inf
        err = SeriesError(serr.truncation_terms, abs_err, rel)

        half = 0.5 * (s + self._alpha)
        lg = specfun.log_gamma(half)
        pre = half * (self._log_q - _LOG_PI)
        log_l = -s.real * self._log_q + (math.log(a_sum) if a_sum > 0.0 else -math.inf)
        arg_l = -s.imag * self._log_q + cmath.phase(l_sum)
        log_mag = pre.real + lg.real + log_l
        phase = pre.imag + lg.imag + arg_l
        value = LogPolarComplex(log_mag, wrap_phase(phase), is_zero)
        return XiEvaluation(point, value, err)

    # -- the real-on-the-line companion --------------------------------

    def _compute_rotation(self) -> float:
        chi = self.character
        q = chi.modulus
        tau = gauss_sum(chi)
        omega = (1j**self._alpha) * math.sqrt(q) / tau
        if abs(abs(omega) - 1.0) > 1e-9:
            raise ArithmeticError(
                f"functional-equation constant lost unit modulus: |omega| = {abs(omega)!r}"
            )
        half = 0.5 * cmath.phase(omega)
        # Fix the residual sign so eta is positive at the first ordinate
        # where it is comfortably nonzero.
        t0 = 0.0
        while t0 <= 40.0:
            ev = self.eval(StripPoint(t0, 0.0))
            if not ev.value.is_zero and ev.series_error.estimated_rel_error < 1e-6:
                c = math.cos(wrap_phase(ev.value.phase + half))
                if abs(c) > 0.5:
                    if c < 0.0:
                        half += math.pi
                    return wrap_phase(half)
            t0 += 0.5
        raise ArithmeticError(
            f"could not normalise the sign of eta for {self.label}: no sample "
            "ordinate gave a clearly nonzero value"
        )

    @property
    def rotation(self) -> float:
        """Phase added to arg xi to make the critical line real."""
        if self._rotation is None:
            self._rotation = self._compute_rotation()
        return self._rotation

    def eta_evaluation(self, point: StripPoint) -> XiEvaluation:
        ev = self.eval(point)
        return XiEvaluation(point, ev.value.rotated(self.rotation), ev.series_error)

    def eta(self, point: StripPoint) -> LogPolarComplex:
        return self.eval(point).value.rotated(self.rotation)

    def __repr__(self) -> str:
        return f"DirichletXi({self.character!r})"


def field_for(chi: DirichletCharacter | None):
    """The field object for a character, or the Riemann field for None."""
    return RiemannXi() if chi is None else DirichletXi(chi)
