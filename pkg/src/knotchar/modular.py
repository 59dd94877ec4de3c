"""Exact integer layer: knot validation, gcd/CRT machinery and the
intersection-index bookkeeping of the component structure.

The irreducible component indexed by (k, kp) meets the reducible line at
circle parameters t = exp(i*pi*l/(m*n)) whose integer labels solve

    l == k   (mod 2m)    and    l == kp       (mod 2n)   (the r=1 end),
    l == k   (mod 2m)    and    l == 2n - kp  (mod 2n)   (the r=0 end).

Both moduli share the factor 2, so a general (non-coprime) CRT is used;
the systems are consistent exactly because k and kp have equal parity.
Folding l to min(l, 2mn-l) implements the t -> 1/t identification.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .errors import (
    InconsistentCongruenceError,
    InvalidComponentError,
    NonPositiveError,
    NotCoprimeError,
    NotInvertibleError,
    TooLargeError,
)

__all__ = [
    "MAX_INDEX",
    "KnotType",
    "RedComponent",
    "RED",
    "IrrComponent",
    "ComponentId",
    "IntersectionIndex",
    "validate_knot",
    "check_component",
    "ext_gcd",
    "mod_inverse",
    "crt",
    "bezout_pair",
    "enumerate_components",
    "admissible_folded",
    "intersection_indices",
    "s_value",
    "red_parameter",
]

# Guards 2*m*n arithmetic against overflow-scale inputs.
MAX_INDEX = 10**6


@dataclass(frozen=True)
class KnotType:
    """Coprime positive pair (m, n) defining the group <x, y | x^m = y^n>."""

    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("m", "n"):
            object.__setattr__(self, name, int(getattr(self, name)))
        if self.m < 1 or self.n < 1:
            raise NonPositiveError(f"indices must be positive, got ({self.m}, {self.n})")
        if self.m > MAX_INDEX or self.n > MAX_INDEX:
            raise TooLargeError(f"indices must be <= {MAX_INDEX}, got ({self.m}, {self.n})")
        if math.gcd(self.m, self.n) != 1:
            raise NotCoprimeError(f"gcd({self.m}, {self.n}) != 1")


def validate_knot(m: int, n: int) -> KnotType:
    """Validated (m, n); raises NonPositive/TooLarge/NotCoprime errors."""
    return KnotType(m, n)


@dataclass(frozen=True)
class RedComponent:
    """The single component of reducible characters."""

    def __str__(self) -> str:
        return "red"


RED = RedComponent()


@dataclass(frozen=True, order=True)
class IrrComponent:
    """Index (k, kp) of an irreducible line, 0<k<m, 0<kp<n, k == kp mod 2."""

    k: int
    kp: int

    def __str__(self) -> str:
        return f"irr({self.k},{self.kp})"


ComponentId = Union[RedComponent, IrrComponent]


def check_component(kt: KnotType, comp: IrrComponent) -> None:
    if not (0 < comp.k < kt.m and 0 < comp.kp < kt.n):
        raise InvalidComponentError(f"{comp} out of range for knot ({kt.m}, {kt.n})")
    if (comp.k - comp.kp) % 2 != 0:
        raise InvalidComponentError(f"{comp} violates the parity rule k == kp (mod 2)")


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, mod: int) -> int:
    """Inverse of a modulo mod, in [0, mod); requires gcd(a, mod) = 1."""
    if mod < 1:
        raise NotInvertibleError(f"modulus must be positive, got {mod}")
    g, x, _ = ext_gcd(a, mod)
    if g != 1:
        raise NotInvertibleError(f"{a} has no inverse modulo {mod} (gcd = {g})")
    return x % mod


def crt(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x == r1 (mod m1), x == r2 (mod m2) for possibly non-coprime moduli.

    Returns the unique representative in [0, lcm(m1, m2)).
    """
    if m1 < 1 or m2 < 1:
        raise InconsistentCongruenceError("moduli must be positive")
    g = math.gcd(m1, m2)
    if (r2 - r1) % g != 0:
        raise InconsistentCongruenceError(
            f"x == {r1} (mod {m1}) and x == {r2} (mod {m2}) have no common solution"
        )
    m2_red = m2 // g
    step = ((r2 - r1) // g * mod_inverse(m1 // g, m2_red)) % m2_red
    lcm = m1 * m2_red
    return (r1 + m1 * step) % lcm


def bezout_pair(kt: KnotType) -> tuple[int, int]:
    """(u, v) with u*n + v*m = 1, |u| minimal (ties resolved to u > 0)."""
    _, u0, _ = ext_gcd(kt.n, kt.m)
    u = u0 % kt.m
    if kt.m - u < u:
        u -= kt.m
    v = (1 - u * kt.n) // kt.m
    return u, v


def enumerate_components(kt: KnotType) -> list[ComponentId]:
    """[RED] then every IrrComponent in lexicographic (k, kp) order."""
    comps: list[ComponentId] = [RED]
    for k in range(1, kt.m):
        start = 1 if k % 2 else 2
        for kp in range(start, kt.n, 2):
            comps.append(IrrComponent(k, kp))
    return comps


def admissible_folded(kt: KnotType) -> list[int]:
    """All l in (0, mn) with m and n both not dividing l.

    These are exactly the folded labels at which irreducible lines can meet
    the reducible line; there are (m-1)(n-1) of them.
    """
    mn = kt.m * kt.n
    return [l for l in range(1, mn) if l % kt.m != 0 and l % kt.n != 0]


@dataclass(frozen=True)
class IntersectionIndex:
    """Raw label l in (0, 2mn) plus its fold min(l, 2mn-l) in (0, mn)."""

    raw: int
    folded: int


def _fold(l: int, two_mn: int) -> int:
    return min(l, two_mn - l)


def intersection_indices(kt: KnotType, comp: IrrComponent) -> tuple[IntersectionIndex, IntersectionIndex]:
    """(l0, l1): the r=0 and r=1 endpoint labels of an irreducible line.

    Solved at the level of the circle parameter: both congruence systems in
    the module docstring are consistent by the parity rule, and the two
    folded labels are always distinct.
    """
    check_component(kt, comp)
    two_m, two_n = 2 * kt.m, 2 * kt.n
    two_mn = 2 * kt.m * kt.n
    raw1 = crt(comp.k, two_m, comp.kp, two_n)
    raw0 = crt(comp.k, two_m, (two_n - comp.kp) % two_n, two_n)
    idx0 = IntersectionIndex(raw0, _fold(raw0, two_mn))
    idx1 = IntersectionIndex(raw1, _fold(raw1, two_mn))
    assert idx0.folded != idx1.folded, "endpoint labels must be distinct"
    return idx0, idx1


def s_value(kt: KnotType, index: IntersectionIndex) -> float:
    """Reducible-line coordinate s = 2 cos(pi * l / (mn)) of the point."""
    return 2.0 * math.cos(math.pi * index.folded / (kt.m * kt.n))


def red_parameter(kt: KnotType, index: IntersectionIndex) -> complex:
    """Circle parameter t = exp(i*pi*l/(mn)) for the raw label."""
    return cmath.exp(1j * math.pi * index.raw / (kt.m * kt.n))
