"""SL(2,C) character varieties of torus knot groups <x, y | x^m = y^n>.

Explicit representation families, the three-trace embedding of the
character variety into C^3, the component and intersection combinatorics,
and a seeded verification harness, with JSON/SVG/matplotlib output.
"""

from .emit import ArcGeometry, FigureSpec, arc_layout, emit_json, emit_svg
from .errors import (
    CharVarietyError,
    EigenvalueNotRootOfUnityError,
    InconsistentCongruenceError,
    InvalidComponentError,
    NonPositiveError,
    NotCoprimeError,
    NotInvertibleError,
    NotIrreducibleError,
    NotReducibleError,
    RelationViolatedError,
    ResampleLimitError,
    TooLargeError,
    WindowTooSmallError,
    ZeroParameterError,
)
from .harness import CheckResult, SuiteReport, bounded_unimodular, run_suite
from .matrices import (
    IDENTITY,
    DistinctEigen,
    EigenResult,
    Mat2,
    NonDiagEigen,
    ScalarEigen,
    UniMat,
    Vec2,
    bracket,
    cpow,
    eigen,
    random_unimodular,
)
from .modular import (
    MAX_INDEX,
    RED,
    ComponentId,
    IntersectionIndex,
    IrrComponent,
    KnotType,
    RedComponent,
    admissible_folded,
    bezout_pair,
    check_component,
    crt,
    enumerate_components,
    ext_gcd,
    intersection_indices,
    mod_inverse,
    red_parameter,
    s_value,
    validate_knot,
)
from .reps import (
    IrredParam,
    ReducibilityVerdict,
    ReducibleReason,
    RepPair,
    build_irreducible,
    build_reducible,
    character_eval,
    classify_reducibility,
    component_eigenvalues,
    conjugate_pair,
    double_ratio,
    relation_defect,
    semisimplify,
)
from .tolerances import DEFAULT_TOL, UNIMODULAR_TOL, Tolerances
from .variety import (
    CharPoint,
    IntersectionRecord,
    IrrLineData,
    VarietyDescription,
    classify_point,
    enumerate_variety,
    nodal_check,
    psi_irr,
    psi_of_pair,
    psi_red,
    tangent_red,
    trace_poly,
)

__version__ = "0.1.0"
