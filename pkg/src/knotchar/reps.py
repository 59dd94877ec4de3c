"""Matrix pairs (A, B) with A^m = B^n, and their canonical coordinates.

Constructs the split (diagonal) family and the one-parameter family on each
irreducible component, decides reducibility, and recovers the parameters
back from a bare pair: the split coordinate s = t + 1/t for reducible pairs
and the projective double ratio r for irreducible ones.

Words in the generators are plain strings over the alphabet "xXyY", where
an upper-case letter stands for the inverse of its lower-case generator.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (
    EigenvalueNotRootOfUnityError,
    NotIrreducibleError,
    NotReducibleError,
    RelationViolatedError,
    ZeroParameterError,
)
from .matrices import (
    DistinctEigen,
    Mat2,
    NonDiagEigen,
    UniMat,
    Vec2,
    bracket,
    cpow,
    eigen,
)
from .modular import IrrComponent, KnotType, bezout_pair, check_component
from .tolerances import DEFAULT_TOL, Tolerances

__all__ = [
    "RepPair",
    "IrredParam",
    "ReducibleReason",
    "ReducibilityVerdict",
    "component_eigenvalues",
    "build_reducible",
    "build_irreducible",
    "conjugate_pair",
    "relation_defect",
    "classify_reducibility",
    "semisimplify",
    "double_ratio",
    "character_eval",
]


@dataclass(frozen=True)
class RepPair:
    """Pair of unimodular matrices standing for a representation.

    The defining relation A^m = B^n is not enforced at construction (so
    that defective pairs can be measured); `relation_defect` reports the
    violation and the classifiers require it below tolerance.
    """

    A: UniMat
    B: UniMat
    kt: KnotType


@dataclass(frozen=True)
class IrredParam:
    """Point (component, r) of an irreducible line, r ranging over all of C.

    r = 0 and r = 1 are the closure points where the line meets the
    reducible component.
    """

    component: IrrComponent
    r: complex


class ReducibleReason(Enum):
    SHARED_EIGENVECTOR = "shared_eigenvector"
    POWER_NOT_CENTRAL = "power_not_central"
    CENTRAL_GENERATOR = "central_generator"
    NON_DIAGONALIZABLE = "non_diagonalizable"


@dataclass(frozen=True)
class ReducibilityVerdict:
    reducible: bool
    reason: Optional[ReducibleReason] = None
    common_line: Optional[Vec2] = None


def component_eigenvalues(kt: KnotType, comp: IrrComponent) -> tuple[complex, complex]:
    """(lam, mu) = (exp(i*pi*k/m), exp(i*pi*kp/n)) for a component index."""
    check_component(kt, comp)
    lam = cmath.exp(1j * math.pi * comp.k / kt.m)
    mu = cmath.exp(1j * math.pi * comp.kp / kt.n)
    return lam, mu


def build_reducible(kt: KnotType, t: complex) -> RepPair:
    """Split pair A = diag(t^n, t^-n), B = diag(t^m, t^-m), t != 0."""
    t = complex(t)
    if t == 0:
        raise ZeroParameterError("the split family needs t != 0")
    a = UniMat.diag(cpow(t, kt.n), cpow(t, -kt.n))
    b = UniMat.diag(cpow(t, kt.m), cpow(t, -kt.m))
    return RepPair(a, b, kt)


def build_irreducible(kt: KnotType, param: IrredParam) -> RepPair:
    """Pair on an irreducible component at double ratio r.

    A = diag(lam, 1/lam), and B is diag(mu, 1/mu) conjugated into the basis
    f1 = (1, 1), f2 = (r-1, r), which realizes double ratio r against the
    eigenbasis of A.  Both A^m and B^n equal (-1)^k * Id.
    """
    lam, mu = component_eigenvalues(kt, param.component)
    r = complex(param.r)
    d = mu - 1.0 / mu
    b = Mat2(r * d + 1.0 / mu, (1.0 - r) * d, r * d, mu - r * d)
    assert abs(b.det - 1.0) <= 1e-10, "constructed B must be unimodular"
    return RepPair(UniMat.diag(lam, 1.0 / lam), UniMat.from_mat(b), kt)


def conjugate_pair(pair: RepPair, p: UniMat) -> RepPair:
    return RepPair(
        UniMat.from_mat(pair.A.conjugate_by(p)),
        UniMat.from_mat(pair.B.conjugate_by(p)),
        pair.kt,
    )


def relation_defect(pair: RepPair) -> float:
    """Max entry modulus of A^m - B^n."""
    return pair.A.power(pair.kt.m).max_diff(pair.B.power(pair.kt.n))


def _central_sign(m: Mat2, tol: Tolerances) -> Optional[int]:
    sign = 1 if m.trace.real >= 0.0 else -1
    if m.max_diff(Mat2.diag(sign, sign)) <= tol.match:
        return sign
    return None


def _any_eigenline(m: UniMat, tol: Tolerances) -> Vec2:
    res = eigen(m, tol)
    if isinstance(res, DistinctEigen):
        return res.vectors[0]
    if isinstance(res, NonDiagEigen):
        return res.vector
    return Vec2(1.0, 0.0)  # scalar matrix: every line works


def classify_reducibility(pair: RepPair, tol: Tolerances = DEFAULT_TOL) -> ReducibilityVerdict:
    """Decide whether the pair has a common invariant line.

    Decision order, most degenerate first: a central generator, a
    non-diagonalizable generator, a non-central common power A^m, and
    finally the generic test of each eigenline of A against B.
    """
    defect = relation_defect(pair)
    if defect > tol.relation:
        raise RelationViolatedError(f"relation defect {defect:.3e} exceeds {tol.relation:g}")
    a, b = pair.A, pair.B
    if _central_sign(a, tol) is not None:
        return ReducibilityVerdict(True, ReducibleReason.CENTRAL_GENERATOR, _any_eigenline(b, tol))
    if _central_sign(b, tol) is not None:
        return ReducibilityVerdict(True, ReducibleReason.CENTRAL_GENERATOR, _any_eigenline(a, tol))
    ea = eigen(a, tol)
    if isinstance(ea, NonDiagEigen):
        return ReducibilityVerdict(True, ReducibleReason.NON_DIAGONALIZABLE, ea.vector)
    eb = eigen(b, tol)
    if isinstance(eb, NonDiagEigen):
        return ReducibilityVerdict(True, ReducibleReason.NON_DIAGONALIZABLE, eb.vector)
    if not isinstance(ea, DistinctEigen) or not isinstance(eb, DistinctEigen):
        # central generators were handled above, so Scalar cannot occur here
        raise RelationViolatedError("inconsistent eigen classification")
    power = a.power(pair.kt.m)
    if _central_sign(power, tol) is None:
        return ReducibilityVerdict(True, ReducibleReason.POWER_NOT_CENTRAL, ea.vectors[0])
    for v in ea.vectors:
        unit = v.scaled_to_unit_max()
        if abs(bracket(b.apply(unit), unit)) <= tol.match:
            return ReducibilityVerdict(True, ReducibleReason.SHARED_EIGENVECTOR, v)
    return ReducibilityVerdict(False)


def _eigenvalue_on_line(m: Mat2, unit: Vec2) -> complex:
    image = m.apply(unit)
    if abs(unit.x) >= abs(unit.y):
        return image.x / unit.x
    return image.y / unit.y


def semisimplify(pair: RepPair, tol: Tolerances = DEFAULT_TOL) -> complex:
    """Split coordinate s = t + 1/t of a reducible pair.

    Reads the eigenvalues lam, mu of A and B on the common line and
    recovers t = lam^u * mu^v from a Bezout pair u*n + v*m = 1, so that
    t^n = lam and t^m = mu.
    """
    verdict = classify_reducibility(pair, tol)
    if not verdict.reducible:
        raise NotReducibleError("pair is irreducible; it has no split form")
    unit = verdict.common_line.scaled_to_unit_max()
    lam = _eigenvalue_on_line(pair.A, unit)
    mu = _eigenvalue_on_line(pair.B, unit)
    u, v = bezout_pair(pair.kt)
    t = cpow(lam, u) * cpow(mu, v)
    return t + 1.0 / t


def _root_index(value: complex, order: int, tol: Tolerances) -> int:
    """k with value ~ exp(i*pi*k/order), given arg(value) in (0, pi)."""
    power = cpow(value, order)
    if min(abs(power - 1.0), abs(power + 1.0)) > tol.match:
        raise EigenvalueNotRootOfUnityError(
            f"{value!r}^{order} = {power!r} is not close to +-1"
        )
    k = round(cmath.phase(value) * order / math.pi)
    target = cmath.exp(1j * math.pi * k / order)
    if abs(value - target) > tol.match:
        raise EigenvalueNotRootOfUnityError(
            f"{value!r} is not within tolerance of a (2*{order})-th root of unity"
        )
    return k


def double_ratio(pair: RepPair, tol: Tolerances = DEFAULT_TOL) -> IrredParam:
    """Canonical (component, r) of an irreducible pair.

    Eigenpairs of A and B are ordered so both leading eigenvalues have
    argument in (0, pi); each reordering swaps r with 1-r, which the
    bracket formula below accounts for automatically since it is evaluated
    after the ordering.  With e1, e2 the eigenlines of A and f1, f2 those
    of B, the double ratio is recovered from

        z = ([f2, e2] * [f1, e1]) / ([f2, e1] * [f1, e2]),   r = 1 / (1 - z),

    the unique form that sends the normalized frame f1 = (1, 1),
    f2 = (r-1, r) in the eigenbasis of A back to r.
    """
    verdict = classify_reducibility(pair, tol)
    if verdict.reducible:
        raise NotIrreducibleError(f"pair is reducible ({verdict.reason.value})")
    ea = eigen(pair.A, tol)
    eb = eigen(pair.B, tol)
    if not isinstance(ea, DistinctEigen) or not isinstance(eb, DistinctEigen):
        raise NotIrreducibleError("irreducible pair must have two distinct eigenlines")
    (lam, lam_inv), (e1, e2) = ea.values, ea.vectors
    if lam.imag < 0.0:
        lam, e1, e2 = lam_inv, e2, e1
    (mu, mu_inv), (f1, f2) = eb.values, eb.vectors
    if mu.imag < 0.0:
        mu, f1, f2 = mu_inv, f2, f1
    k = _root_index(lam, pair.kt.m, tol)
    kp = _root_index(mu, pair.kt.n, tol)
    component = IrrComponent(k, kp)
    check_component(pair.kt, component)
    z = (bracket(f2, e2) * bracket(f1, e1)) / (bracket(f2, e1) * bracket(f1, e2))
    return IrredParam(component, 1.0 / (1.0 - z))


def character_eval(pair: RepPair, word: str) -> complex:
    """Trace of the word evaluated in the pair; the empty word gives 2."""
    letters = {
        "x": pair.A,
        "X": pair.A.inverse(),
        "y": pair.B,
        "Y": pair.B.inverse(),
    }
    acc: Mat2 = Mat2(1.0, 0.0, 0.0, 1.0)
    for ch in word:
        if ch not in letters:
            raise ValueError(f"bad letter {ch!r}: words are strings over 'xXyY'")
        acc = acc @ letters[ch]
    return acc.trace
