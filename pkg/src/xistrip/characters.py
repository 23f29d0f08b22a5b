"""Dirichlet characters mod q with exact root-of-unity values.

The unit group (Z/qZ)* is factored through the CRT into cyclic components
(odd prime powers each contribute one generator, 2^e with e >= 3
contributes the pair -1 and 5), and a character is an exponent vector
against those generators.  Values are carried as exact angles -- rational
multiples of a full turn, stored as `Fraction` -- so orthogonality,
conductor and parity computations are exact; the complex table is derived
from the angles once.

Enumeration is deterministic: components are ordered by prime (the order-2
part of 2^e before the 5-part), exponent vectors are enumerated
lexicographically, and index 0 is always the principal character.  No
other labelling scheme is used or exposed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "DirichletCharacter",
    "character_group",
    "character",
    "primitive_characters",
    "conductor",
    "gauss_sum",
]

_TWO_PI = 2.0 * math.pi


def _factorize(q: int) -> list[tuple[int, int]]:
    """Prime factorisation as (p, e) pairs, ascending p."""
    out = []
    d = 2
    while d * d <= q:
        if q % d == 0:
            e = 0
            while q % d == 0:
                q //= d
                e += 1
            out.append((d, e))
        d += 1
    if q > 1:
        out.append((q, 1))
    return out


def _multiplicative_order(g: int, modulus: int, group_order: int) -> int:
    """Order of g mod `modulus`, knowing it divides `group_order`."""
    order = group_order
    for p, _ in _factorize(group_order):
        while order % p == 0 and pow(g, order // p, modulus) == 1:
            order //= p
    return order


def _smallest_primitive_root(pk: int, phi: int) -> int:
    for g in range(2, pk):
        if math.gcd(g, pk) != 1:
            continue
        if _multiplicative_order(g, pk, phi) == phi:
            return g
    raise ValueError(f"no primitive root mod {pk}")  # unreachable for odd p^k


@dataclass(frozen=True)
class _Component:
    """One cyclic factor of (Z/qZ)*: a generator and its order."""

    prime_power: int
    generator: int  # lifted mod q: equals the local generator mod p^e, 1 elsewhere
    order: int
    dlog: dict[int, int] = field(repr=False)  # residue mod p^e -> exponent


def _crt_lift(local: int, pk: int, q: int) -> int:
    """The residue mod q that is `local` mod pk and 1 mod q/pk."""
    other = q // pk
    if other == 1:
        return local % q
    inv = pow(pk, -1, other)
    x = local + pk * (((1 - local) * inv) % other)
    return x % q


def _components(q: int) -> list[_Component]:
    comps: list[_Component] = []
    for p, e in _factorize(q):
        pk = p**e
        if p == 2:
            if e == 1:
                continue  # (Z/2Z)* is trivial
            if e == 2:
                gens = [(3, 2)]
            else:
                gens = [(pk - 1, 2), (5, pk // 4)]
        else:
            phi = pk // p * (p - 1)
            gens = [(_smallest_primitive_root(pk, phi), phi)]
        # Discrete logs mod pk.  With two generators (2^e, e >= 3) every
        # unit is (-1)^a 5^b; enumerate the products.
        if len(gens) == 1:
            g, d = gens[0]
            table = {}
            x = 1
            for k in range(d):
                table[x] = k
                x = x * g % pk
            comps.append(_Component(pk, _crt_lift(g, pk, q), d, table))
        else:
            (g1, d1), (g2, d2) = gens
            t1, t2 = {}, {}
            x = 1
            for a in range(d1):
                y = x
                for b in range(d2):
                    t1[y] = a
                    t2[y] = b
                    y = y * g2 % pk
                x = x * g1 % pk
            comps.append(_Component(pk, _crt_lift(g1, pk, q), d1, t1))
            comps.append(_Component(pk, _crt_lift(g2, pk, q), d2, t2))
    return comps


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod q, identified by (modulus, index).

    ``angles[n]`` is the exact angle of chi(n) as a fraction of a full
    turn (None when gcd(n, q) > 1); ``values[n]`` is the corresponding
    complex number.  ``parity`` is 0 for even characters (chi(-1) = 1)
    and 1 for odd ones.
    """

    modulus: int
    index: int
    parity: int
    conductor: int
    angles: tuple
    values: tuple

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    def angle(self, n: int):
        """Exact angle of chi(n) as a Fraction in [0, 1), or None."""
        return self.angles[n % self.modulus]

    @property
    def is_principal(self) -> bool:
        return self.index == 0

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def order(self) -> int:
        """Order of the character in the dual group."""
        denoms = [a.denominator for a in self.angles if a is not None]
        return math.lcm(*denoms) if denoms else 1

    def conjugate(self) -> "DirichletCharacter":
        """The complex-conjugate character (from the cached group)."""
        target = tuple(
            None if a is None else (-a) % 1 for a in self.angles
        )
        for chi in character_group(self.modulus):
            if chi.angles == target:
                return chi
        raise RuntimeError("conjugate character missing from group")  # unreachable

    def __repr__(self) -> str:
        return (
            f"DirichletCharacter(modulus={self.modulus}, index={self.index}, "
            f"parity={self.parity}, conductor={self.conductor})"
        )


def _conductor_from_angles(q: int, angles: tuple) -> int:
    """Smallest f | q such that chi is trivial on units congruent 1 mod f."""
    zero = Fraction(0)
    for f in range(1, q + 1):
        if q % f != 0:
            continue
        ok = True
        for n in range(1, q + 1):
            if angles[n % q] is None or (n - 1) % f != 0:
                continue
            if angles[n % q] != zero:
                ok = False
                break
        if ok:
            return f
    return q


@lru_cache(maxsize=None)
def character_group(q: int) -> tuple[DirichletCharacter, ...]:
    """All phi(q) Dirichlet characters mod q, deterministically ordered.

    Index 0 is the principal character; the enumeration is the
    lexicographic order of exponent vectors against the fixed generator
    components, so indices are stable across runs and platforms.
    """
    if q < 1:
        raise ValueError("modulus must be positive")
    comps = _components(q)
    orders = [c.order for c in comps]
    phi = math.prod(orders) if orders else 1

    # Exponent vector of every unit against the component generators.
    unit_exps: dict[int, tuple[int, ...]] = {}
    for n in range(q):
        if math.gcd(n, q) != 1 and q > 1:
            continue
        unit_exps[n] = tuple(c.dlog[n % c.prime_power] for c in comps)

    chars = []
    for index in range(phi):
        # Mixed-radix digits of the index, first component slowest.
        rem = index
        m = []
        for d in reversed(orders):
            m.append(rem % d)
            rem //= d
        m.reverse()

        angles: list = [None] * q
        for n_mod, exps in unit_exps.items():
            a = Fraction(0)
            for mi, ei, di in zip(m, exps, orders):
                a += Fraction(mi * ei, di)
            angles[n_mod] = a % 1
        values = tuple(
            0j if a is None else cmath.exp(2j * math.pi * float(a)) for a in angles
        )
        angles_t = tuple(angles)
        parity = 0
        neg_one = angles_t[(q - 1) % q]
        if neg_one is not None and neg_one != 0:
            parity = 1
        chars.append(
            DirichletCharacter(
                modulus=q,
                index=index,
                parity=parity,
                conductor=_conductor_from_angles(q, angles_t),
                angles=angles_t,
                values=values,
            )
        )
    return tuple(chars)


def character(q: int, index: int) -> DirichletCharacter:
    """The character mod q with the given enumeration index."""
    group = character_group(q)
    if not 0 <= index < len(group):
        raise ValueError(f"index {index} out of range for modulus {q} "
                         f"(group has {len(group)} characters)")
    return group[index]


def primitive_characters(q: int) -> list[DirichletCharacter]:
    """Primitive characters mod q (empty for q = 1, 2)."""
    if q <= 2:
        return []
    return [chi for chi in character_group(q) if chi.is_primitive]


def conductor(chi: DirichletCharacter) -> int:
    """Conductor of chi: the modulus of the primitive character inducing it."""
    return chi.conductor


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum over m mod q of chi(m) exp(2 pi i m / q).

    Exact angles are combined before any rounding, so each term costs one
    complex exponential; for primitive chi, |tau| = sqrt(q) to rounding.
    """
    q = chi.modulus
    total = 0j
    for m in range(1, q + 1):
        a = chi.angle(m)
        if a is None:
            continue
        total += cmath.exp(2j * math.pi * float(a + Fraction(m, q)))
    return total
