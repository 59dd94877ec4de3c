"""Exception hierarchy for the whole package.

Every contract violation raises a subclass of CharVarietyError so that
callers (and the CLI) can treat bad inputs uniformly.
"""


class CharVarietyError(Exception):
    """Base class for all knotchar errors."""


class NonPositiveError(CharVarietyError):
    """Knot indices must be positive integers."""


class TooLargeError(CharVarietyError):
    """Knot index exceeds the supported range (guards 2*m*n arithmetic)."""


class NotCoprimeError(CharVarietyError):
    """gcd(m, n) != 1; the pair does not define a torus knot."""


class InvalidComponentError(CharVarietyError):
    """Component index (k, kp) violates 0<k<m, 0<kp<n or the parity rule."""


class NotInvertibleError(CharVarietyError):
    """No modular inverse exists (arguments not coprime)."""


class InconsistentCongruenceError(CharVarietyError):
    """The two congruences admit no common solution."""


class ZeroParameterError(CharVarietyError):
    """The diagonal family parameter t must be nonzero."""


class RelationViolatedError(CharVarietyError):
    """Matrix pair does not satisfy A^m = B^n within tolerance."""


class NotReducibleError(CharVarietyError):
    """Operation requires a reducible pair."""


class NotIrreducibleError(CharVarietyError):
    """Operation requires an irreducible pair."""


class EigenvalueNotRootOfUnityError(CharVarietyError):
    """Generator eigenvalue is not (close to) the required root of unity."""


class WindowTooSmallError(CharVarietyError):
    """Figure window does not contain every intersection abscissa."""


class ResampleLimitError(CharVarietyError):
    """Random sampling failed to produce an acceptable value."""
