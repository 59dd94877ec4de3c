"""Complex 2x2 linear algebra for SL(2,C) computations.

Closed-form arithmetic on small matrices: products, integer powers by
repeated squaring, adjugate inverses, a total eigen-classification and the
projective bracket.  Everything is double precision and value-semantic;
the only mutable object anywhere is the caller's random generator.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Union

from .errors import ResampleLimitError
from .tolerances import DEFAULT_TOL, UNIMODULAR_TOL, Tolerances

__all__ = [
    "Mat2",
    "UniMat",
    "Vec2",
    "IDENTITY",
    "DistinctEigen",
    "ScalarEigen",
    "NonDiagEigen",
    "EigenResult",
    "bracket",
    "cpow",
    "eigen",
    "random_unimodular",
]


def cpow(z: complex, e: int) -> complex:
    """z**e for an integer e, by repeated squaring (negative e via 1/z)."""
    if e < 0:
        z, e = 1.0 / z, -e
    out = 1.0 + 0.0j
    z = complex(z)
    while e:
        if e & 1:
            out *= z
        z *= z
        e >>= 1
    return out


def _finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite value {z!r}")
    return z


@dataclass(frozen=True)
class Vec2:
    """Column vector; usually read as a point of the projective line."""

    x: complex
    y: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _finite(self.x))
        object.__setattr__(self, "y", _finite(self.y))

    def scaled_to_unit_max(self) -> "Vec2":
        s = max(abs(self.x), abs(self.y))
        if s == 0.0:
            raise ValueError("zero vector has no projective class")
        return Vec2(self.x / s, self.y / s)


def bracket(v: Vec2, w: Vec2) -> complex:
    """det of the matrix with columns v, w; antisymmetric, zero iff parallel."""
    return v.x * w.y - v.y * w.x


@dataclass(frozen=True)
class Mat2:
    """Row-major complex 2x2 matrix with finite entries."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _finite(getattr(self, name)))

    @classmethod
    def diag(cls, x: complex, y: complex):
        return cls(x, 0.0, 0.0, y)

    @property
    def trace(self) -> complex:
        return self.a + self.d

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def power(self, e: int) -> "Mat2":
        """Binary exponentiation; e must be >= 0 for a general matrix."""
        if e < 0:
            raise ValueError("negative power requires a unimodular matrix")
        result = Mat2(1.0, 0.0, 0.0, 1.0)
        base = Mat2(self.a, self.b, self.c, self.d)
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def conjugate_by(self, p: "UniMat") -> "Mat2":
        """Change of basis p^-1 @ self @ p; preserves trace and determinant."""
        return p.inverse() @ self @ p

    def apply(self, v: Vec2) -> Vec2:
        return Vec2(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def max_norm(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def max_diff(self, other: "Mat2") -> float:
        return max(
            abs(self.a - other.a),
            abs(self.b - other.b),
            abs(self.c - other.c),
            abs(self.d - other.d),
        )


@dataclass(frozen=True)
class UniMat(Mat2):
    """Element of SL(2,C): determinant within UNIMODULAR_TOL of one."""

    def __post_init__(self) -> None:
        super().__post_init__()
        err = abs(self.det - 1.0)
        if err > UNIMODULAR_TOL:
            raise ValueError(f"matrix is not unimodular (|det-1| = {err:.3e})")

    @classmethod
    def from_mat(cls, m: Mat2) -> "UniMat":
        return cls(m.a, m.b, m.c, m.d)

    def inverse(self) -> "UniMat":
        # adjugate formula; exact because det is (numerically) one
        return UniMat(self.d, -self.b, -self.c, self.a)

    def power(self, e: int) -> Mat2:
        if e < 0:
            return self.inverse().power(-e)
        return super().power(e)


IDENTITY = UniMat(1.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class DistinctEigen:
    """Two distinct eigenvalues (lam, 1/lam) with matching eigenvectors."""

    values: tuple[complex, complex]
    vectors: tuple[Vec2, Vec2]


@dataclass(frozen=True)
class ScalarEigen:
    """The matrix is sign * Id with sign in {+1, -1}."""

    sign: int


@dataclass(frozen=True)
class NonDiagEigen:
    """Repeated eigenvalue sign in {+1, -1} with a single eigenline."""

    sign: int
    vector: Vec2


EigenResult = Union[DistinctEigen, ScalarEigen, NonDiagEigen]


def _kernel_vector(m: Mat2, lam: complex) -> Vec2:
    # A kernel vector of (m - lam*Id), read off the larger of the two rows;
    # the larger row is the numerically reliable one.
    p1, q1 = m.a - lam, m.b
    p2, q2 = m.c, m.d - lam
    if abs(p1) + abs(q1) >= abs(p2) + abs(q2):
        return Vec2(q1, -p1)
    return Vec2(q2, -p2)


def eigen(m: UniMat, tol: Tolerances = DEFAULT_TOL) -> EigenResult:
    """Total eigen-classification of a unimodular matrix.

    Eigenvalues come from lam = (tr +- sqrt(tr^2-4))/2.  When |tr^2 - 4|
    exceeds tol.degenerate the two eigenvalues are distinct and the second
    one is computed as 1/lam (det is one).  Otherwise the repeated
    eigenvalue is +-1 by the sign of the trace, and the matrix is either
    scalar (entrywise close to +-Id) or non-diagonalizable with a unique
    eigenline.
    """
    tr = m.trace
    disc = tr * tr - 4.0
    if abs(disc) > tol.degenerate:
        root = cmath.sqrt(disc)
        # align the root with the trace so the addition below cannot cancel
        if tr.real * root.real + tr.imag * root.imag < 0.0:
            root = -root
        lam = (tr + root) / 2.0
        lam_inv = 1.0 / lam
        return DistinctEigen(
            (lam, lam_inv),
            (_kernel_vector(m, lam), _kernel_vector(m, lam_inv)),
        )
    sign = 1 if tr.real >= 0.0 else -1
    if m.max_diff(Mat2.diag(sign, sign)) <= tol.match:
        return ScalarEigen(sign)
    return NonDiagEigen(sign, _kernel_vector(m, complex(sign)))


def random_unimodular(rng: random.Random) -> UniMat:
    """Random SL(2,C) element, deterministic for a fixed generator state.

    Entries a, b, c are standard complex Gaussians and d solves ad-bc=1.
    Draws with |a| < 1e-6 are rejected to keep the division stable.
    """
    for _ in range(100):
        a = complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        b = complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        c = complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        if abs(a) < 1e-6:
            continue
        return UniMat(a, b, c, (1.0 + b * c) / a)
    raise ResampleLimitError("could not sample a unimodular matrix in 100 draws")
