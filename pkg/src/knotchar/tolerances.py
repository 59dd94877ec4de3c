"""Numeric tolerances shared across the package.

All tolerances are absolute bounds on a complex modulus (or on the max
modulus of a difference of entries).  One Tolerances value is threaded
through every operation that needs to make an approximate decision.
"""

from dataclasses import dataclass

# |det - 1| allowed when constructing a unimodular matrix.
UNIMODULAR_TOL = 1e-9


@dataclass(frozen=True)
class Tolerances:
    # |trace^2 - 4| below this means a degenerate (repeated) eigenvalue.
    degenerate: float = 1e-12
    # ||A^m - B^n||_max allowed for a pair to count as a representation.
    relation: float = 1e-8
    # CharPoint metric used when matching a point to a component.
    membership: float = 1e-9
    # Generic approximate-equality bound: shared-eigenvector tests,
    # root-of-unity rounding, round-trip comparisons.
    match: float = 1e-8


DEFAULT_TOL = Tolerances()
