"""The character curve in C^3 under the three-trace embedding.

The map psi sends a pair (A, B) to (tr A, tr B, tr AB).  On the reducible
component it has the closed form

    s = t + 1/t  ->  (t^n + t^-n,  t^m + t^-m,  t^(n+m) + t^-(n+m)),

and on the irreducible component (k, kp) it is an affine line in the third
coordinate.  This module enumerates the full component structure with its
intersection records, evaluates tangents on the reducible image, checks the
crossings are transverse nodes, and inverts the embedding by classifying an
arbitrary point of C^3 back onto the components that contain it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ZeroParameterError
from .matrices import cpow, _finite
from .modular import (
    RED,
    ComponentId,
    IntersectionIndex,
    IrrComponent,
    KnotType,
    enumerate_components,
    intersection_indices,
    red_parameter,
    s_value,
)
from .reps import IrredParam, RepPair, component_eigenvalues
from .tolerances import DEFAULT_TOL, Tolerances

__all__ = [
    "CharPoint",
    "IntersectionRecord",
    "IrrLineData",
    "VarietyDescription",
    "psi_of_pair",
    "psi_red",
    "psi_irr",
    "enumerate_variety",
    "tangent_red",
    "nodal_check",
    "trace_poly",
    "classify_point",
]

# Distinct reducible parameters t and 1/t give the same character; solutions
# are deduplicated on the s coordinate at this fixed resolution.
S_DEDUP_TOL = 1e-9


@dataclass(frozen=True)
class CharPoint:
    """Trace coordinates (tr A, tr B, tr AB) of a character."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _finite(getattr(self, name)))

    def triple(self) -> tuple[complex, complex, complex]:
        return (self.a, self.b, self.c)

    def max_diff(self, other: "CharPoint") -> float:
        return max(abs(self.a - other.a), abs(self.b - other.b), abs(self.c - other.c))


@dataclass(frozen=True)
class IntersectionRecord:
    """One meeting point of an irreducible line with the reducible line."""

    component: IrrComponent
    endpoint: str  # "r0" or "r1"
    index: IntersectionIndex
    s: float
    point: CharPoint


@dataclass(frozen=True)
class IrrLineData:
    """An irreducible line with its trace-coordinate image and endpoints."""

    component: IrrComponent
    lam: complex
    mu: complex
    psi_base: CharPoint  # image at r = 0
    psi_dir: tuple[complex, complex, complex]  # un-normalized direction
    records: tuple[IntersectionRecord, IntersectionRecord]  # (r0, r1)


@dataclass(frozen=True)
class VarietyDescription:
    """Full enumeration of the component and intersection structure."""

    kt: KnotType
    lines: tuple[IrrLineData, ...]

    @property
    def components(self) -> list[ComponentId]:
        return [RED] + [line.component for line in self.lines]

    @property
    def intersections(self) -> list[IntersectionRecord]:
        return [rec for line in self.lines for rec in line.records]

    @property
    def counts(self) -> dict[str, int]:
        return {
            "irr_lines": len(self.lines),
            "intersection_points": 2 * len(self.lines),
        }

    def incidence(self) -> list[tuple[float, int, IrrComponent]]:
        """(s, folded label, component) for every node, sorted by s."""
        rows = [(rec.s, rec.index.folded, rec.component) for rec in self.intersections]
        rows.sort(key=lambda row: (row[0], row[1]))
        return rows


def psi_of_pair(pair: RepPair) -> CharPoint:
    """(tr A, tr B, tr AB) of an explicit pair."""
    return CharPoint(pair.A.trace, pair.B.trace, (pair.A @ pair.B).trace)


def psi_red(kt: KnotType, t: complex) -> CharPoint:
    """Closed form of psi on the reducible family at parameter t != 0."""
    t = complex(t)
    if t == 0:
        raise ZeroParameterError("the reducible image needs t != 0")
    return CharPoint(
        cpow(t, kt.n) + cpow(t, -kt.n),
        cpow(t, kt.m) + cpow(t, -kt.m),
        cpow(t, kt.n + kt.m) + cpow(t, -(kt.n + kt.m)),
    )


def psi_irr(kt: KnotType, param: IrredParam) -> CharPoint:
    """Closed form of psi on an irreducible line; affine-linear in r."""
    lam, mu = component_eigenvalues(kt, param.component)
    r = complex(param.r)
    base = lam / mu + mu / lam
    slope = (lam - 1.0 / lam) * (mu - 1.0 / mu)
    return CharPoint(lam + 1.0 / lam, mu + 1.0 / mu, base + r * slope)


def enumerate_variety(kt: KnotType) -> VarietyDescription:
    """All components with their eigenvalue data and intersection records."""
    lines = []
    for comp in enumerate_components(kt):
        if not isinstance(comp, IrrComponent):
            continue
        lam, mu = component_eigenvalues(kt, comp)
        idx0, idx1 = intersection_indices(kt, comp)
        rec0 = IntersectionRecord(comp, "r0", idx0, s_value(kt, idx0), psi_red(kt, red_parameter(kt, idx0)))
        rec1 = IntersectionRecord(comp, "r1", idx1, s_value(kt, idx1), psi_red(kt, red_parameter(kt, idx1)))
        base = psi_irr(kt, IrredParam(comp, 0.0))
        direction = (0.0j, 0.0j, (lam - 1.0 / lam) * (mu - 1.0 / mu))
        lines.append(IrrLineData(comp, lam, mu, base, direction, (rec0, rec1)))
    expected = (kt.m - 1) * (kt.n - 1) // 2
    assert len(lines) == expected, "irreducible line count off"
    assert all(line.records[0].index.folded != line.records[1].index.folded for line in lines)
    return VarietyDescription(kt, tuple(lines))


def _geom_sum(t: complex, j: int) -> complex:
    """sum of t^(2i) for 0 <= i < j, evaluated by Horner in t^2.

    Equals (t^(2j) - 1) / (t^2 - 1) with the singularity at t = +-1 removed.
    """
    u = t * t
    acc = 0.0 + 0.0j
    for _ in range(j):
        acc = acc * u + 1.0
    return acc


def tangent_red(kt: KnotType, t: complex) -> tuple[complex, complex, complex]:
    """d(psi_red)/ds at parameter t; never the zero vector.

    Component j in (n, m, n+m) is j * t^(1-j) * sum_{i<j} t^(2i); the sum
    form keeps the value finite at t = +-1, where it equals j.
    """
    t = complex(t)
    if t == 0:
        raise ZeroParameterError("the tangent needs t != 0")
    n, m = kt.n, kt.m
    return (
        n * cpow(t, 1 - n) * _geom_sum(t, n),
        m * cpow(t, 1 - m) * _geom_sum(t, m),
        (n + m) * cpow(t, 1 - n - m) * _geom_sum(t, n + m),
    )


def nodal_check(kt: KnotType, rec: IntersectionRecord, threshold: float = 1e-6) -> bool:
    """True when the crossing at the record is a transverse node.

    The irreducible line points in the (0, 0, *) direction, so the crossing
    is transverse exactly when the reducible tangent has a nonzero first or
    second component.
    """
    tangent = tangent_red(kt, red_parameter(kt, rec.index))
    return abs(tangent[0]) > threshold or abs(tangent[1]) > threshold


def trace_poly(j: int, s: complex) -> complex:
    """p_j with p_j(t + 1/t) = t^j + t^-j; p_0 = 2, p_1 = s, then the
    three-term recurrence p_{j+1} = s*p_j - p_{j-1}."""
    if j < 0:
        raise ValueError("trace polynomial index must be >= 0")
    prev, cur = 2.0 + 0.0j, complex(s)
    if j == 0:
        return prev
    for _ in range(j - 1):
        prev, cur = cur, complex(s) * cur - prev
    return cur


def _red_candidates(kt: KnotType, a: complex) -> list[complex]:
    """All t with t^n + t^-n = a, as 2n closed-form candidates.

    w = t^n solves w + 1/w = a; the larger quadratic root is kept (the
    smaller would cancel catastrophically) and its reciprocal used for the
    other branch, then all n-th roots of each are taken.
    """
    root = cmath.sqrt(a * a - 4.0)
    w_plus = 0.5 * (a + root)
    w_minus = 0.5 * (a - root)
    w_big = w_plus if abs(w_plus) >= abs(w_minus) else w_minus
    candidates = []
    for w in (w_big, 1.0 / w_big):
        base = cmath.exp(cmath.log(w) / kt.n)
        for idx in range(kt.n):
            candidates.append(base * cmath.exp(2j * math.pi * idx / kt.n))
    return candidates


def classify_point(
    kt: KnotType, q: CharPoint, tol: Tolerances = DEFAULT_TOL
) -> list[tuple[ComponentId, complex]]:
    """Every component containing q, with the parameter value on it.

    Reducible membership tests the 2n closed-form candidates for t against
    the full point in the max-modulus metric and reports s = t + 1/t,
    deduplicated under t -> 1/t.  Irreducible membership only constrains
    the first two coordinates (the line spans every third coordinate) and
    reports the affine parameter r.  An empty list means q is off the curve.
    """
    matches: list[tuple[ComponentId, complex]] = []
    seen_s: list[complex] = []
    for t in _red_candidates(kt, q.a):
        if psi_red(kt, t).max_diff(q) <= tol.membership:
            s = t + 1.0 / t
            if all(abs(s - prev) > S_DEDUP_TOL for prev in seen_s):
                seen_s.append(s)
                matches.append((RED, s))
    for comp in enumerate_components(kt):
        if not isinstance(comp, IrrComponent):
            continue
        lam, mu = component_eigenvalues(kt, comp)
        if abs(q.a - 2.0 * math.cos(math.pi * comp.k / kt.m)) > tol.membership:
            continue
        if abs(q.b - 2.0 * math.cos(math.pi * comp.kp / kt.n)) > tol.membership:
            continue
        r = (q.c - (lam / mu + mu / lam)) / ((lam - 1.0 / lam) * (mu - 1.0 / mu))
        matches.append((comp, r))
    return matches
