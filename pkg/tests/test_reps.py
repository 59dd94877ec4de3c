import cmath
import math
import random

import pytest

from knotchar.errors import (
    EigenvalueNotRootOfUnityError,
    NotIrreducibleError,
    NotReducibleError,
    RelationViolatedError,
    ZeroParameterError,
)
from knotchar.harness import bounded_unimodular, sample_ratio
from knotchar.matrices import IDENTITY, Mat2, UniMat, Vec2, bracket
from knotchar.modular import IrrComponent, KnotType, intersection_indices, s_value
from knotchar.reps import (
    IrredParam,
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
from knotchar.tolerances import Tolerances

SQRT3 = math.sqrt(3.0)
TREFOIL = KnotType(2, 3)
C11 = IrrComponent(1, 1)


def coprime_pairs(limit, lo=1):
    return [
        (m, n)
        for m in range(lo, limit + 1)
        for n in range(lo, limit + 1)
        if math.gcd(m, n) == 1
    ]


def eigvec_residual(m, v):
    unit = v.scaled_to_unit_max()
    return abs(bracket(m.apply(unit), unit))


# --------------------------------------------------------------- constructors


def test_build_reducible_examples():
    p = build_reducible(TREFOIL, 1.0)
    assert p.A.max_diff(IDENTITY) == 0.0 and p.B.max_diff(IDENTITY) == 0.0
    p = build_reducible(TREFOIL, 1j)
    assert p.A.max_diff(Mat2.diag(-1j, 1j)) < 1e-15
    assert p.B.max_diff(Mat2.diag(-1.0, -1.0)) < 1e-15
    p = build_reducible(TREFOIL, cmath.exp(1j * math.pi / 6.0))
    minus_id = Mat2.diag(-1.0, -1.0)
    assert p.A.power(2).max_diff(minus_id) < 1e-14
    assert p.B.power(3).max_diff(minus_id) < 1e-14
    with pytest.raises(ZeroParameterError):
        build_reducible(TREFOIL, 0.0)


def test_build_irreducible_triangular_endpoints():
    mu = cmath.exp(1j * math.pi / 3.0)
    d = mu - 1.0 / mu
    p0 = build_irreducible(TREFOIL, IrredParam(C11, 0.0))
    assert p0.B.max_diff(Mat2(1.0 / mu, d, 0.0, mu)) < 1e-15
    p1 = build_irreducible(TREFOIL, IrredParam(C11, 1.0))
    assert p1.B.max_diff(Mat2(mu, 0.0, d, 1.0 / mu)) < 1e-15


def test_build_irreducible_power_is_central():
    for m, n in coprime_pairs(8, lo=2):
        kt = KnotType(m, n)
        for comp in [IrrComponent(k, kp) for k in range(1, m) for kp in range(1, n) if (k - kp) % 2 == 0]:
            p = build_irreducible(kt, IrredParam(comp, 0.37 + 0.81j))
            sign = (-1.0) ** comp.k
            central = Mat2.diag(sign, sign)
            assert p.A.power(m).max_diff(central) < 1e-12
            assert p.B.power(n).max_diff(central) < 1e-12


def test_constructor_soundness_sweep():
    rng = random.Random(2024)
    for m, n in coprime_pairs(8):
        kt = KnotType(m, n)
        comps = [IrrComponent(k, kp) for k in range(1, m) for kp in range(1, n) if (k - kp) % 2 == 0]
        for _ in range(100):
            t = cmath.exp(complex(rng.uniform(-0.05, 0.05), rng.uniform(0, 2 * math.pi)))
            assert relation_defect(build_reducible(kt, t)) <= 1e-10
        for comp in comps:
            for _ in range(25):
                r = complex(rng.gauss(0, 1), rng.gauss(0, 1))
                assert relation_defect(build_irreducible(kt, IrredParam(comp, r))) <= 1e-10


def test_relation_defect_of_broken_pair():
    pair = RepPair(IDENTITY, UniMat.diag(2.0, 0.5), TREFOIL)
    assert abs(relation_defect(pair) - 7.0) < 1e-12


# ----------------------------------------------------------------- classifier


def test_classify_case_power_not_central():
    verdict = classify_reducibility(build_reducible(TREFOIL, 2.0))
    assert verdict.reducible and verdict.reason == ReducibleReason.POWER_NOT_CENTRAL
    pair = build_reducible(TREFOIL, 2.0)
    assert eigvec_residual(pair.A, verdict.common_line) < 1e-10
    assert eigvec_residual(pair.B, verdict.common_line) < 1e-10


def test_classify_case_central_generator():
    omega = cmath.exp(2j * math.pi / 3.0)
    pair = RepPair(IDENTITY, UniMat.diag(omega, 1.0 / omega), TREFOIL)  # Id^2 = B^3 = Id
    verdict = classify_reducibility(pair)
    assert verdict.reducible and verdict.reason == ReducibleReason.CENTRAL_GENERATOR
    assert eigvec_residual(pair.B, verdict.common_line) < 1e-10


def test_classify_case_non_diagonalizable():
    # unipotent solution of A^2 = B^3: shared eigenline (1, 0)
    pair = RepPair(UniMat(1.0, 1.0, 0.0, 1.0), UniMat(1.0, 2.0 / 3.0, 0.0, 1.0), TREFOIL)
    verdict = classify_reducibility(pair)
    assert verdict.reducible and verdict.reason == ReducibleReason.NON_DIAGONALIZABLE
    assert abs(bracket(verdict.common_line, Vec2(1.0, 0.0))) < 1e-12


def test_classify_irreducible_interior_and_reducible_endpoints():
    assert not classify_reducibility(build_irreducible(TREFOIL, IrredParam(C11, 2.0))).reducible
    v1 = classify_reducibility(build_irreducible(TREFOIL, IrredParam(C11, 1.0)))
    assert v1.reducible and v1.reason == ReducibleReason.SHARED_EIGENVECTOR
    assert abs(bracket(v1.common_line, Vec2(0.0, 1.0))) < 1e-12
    v0 = classify_reducibility(build_irreducible(TREFOIL, IrredParam(C11, 0.0)))
    assert v0.reducible and abs(bracket(v0.common_line, Vec2(1.0, 0.0))) < 1e-12


def test_classifier_matches_parameter_location_sweep():
    rng = random.Random(77)
    for m, n in coprime_pairs(8, lo=2):
        kt = KnotType(m, n)
        comps = [IrrComponent(k, kp) for k in range(1, m) for kp in range(1, n) if (k - kp) % 2 == 0]
        for comp in comps:
            for _ in range(10):
                r = sample_ratio(rng, avoid_endpoints=True)
                assert not classify_reducibility(build_irreducible(kt, IrredParam(comp, r))).reducible
            for r in (0.0, 1.0):
                assert classify_reducibility(build_irreducible(kt, IrredParam(comp, r))).reducible


def test_classify_requires_relation():
    with pytest.raises(RelationViolatedError):
        classify_reducibility(RepPair(IDENTITY, UniMat.diag(2.0, 0.5), TREFOIL))


# ------------------------------------------------------------- semisimplify


def test_semisimplify_round_trip():
    rng = random.Random(6)
    for m, n in coprime_pairs(8):
        kt = KnotType(m, n)
        for _ in range(20):
            t = cmath.exp(complex(rng.uniform(-0.1, 0.1), rng.uniform(0, 2 * math.pi)))
            s = semisimplify(build_reducible(kt, t))
            assert abs(s - (t + 1.0 / t)) <= 1e-8


def test_semisimplify_at_endpoints_matches_labels():
    for m, n in coprime_pairs(10, lo=2):
        kt = KnotType(m, n)
        for comp in [IrrComponent(k, kp) for k in range(1, m) for kp in range(1, n) if (k - kp) % 2 == 0]:
            idx0, idx1 = intersection_indices(kt, comp)
            s1 = semisimplify(build_irreducible(kt, IrredParam(comp, 1.0)))
            s0 = semisimplify(build_irreducible(kt, IrredParam(comp, 0.0)))
            assert abs(s1 - s_value(kt, idx1)) <= 1e-8
            assert abs(s0 - s_value(kt, idx0)) <= 1e-8


def test_semisimplify_trefoil_value():
    s = semisimplify(build_irreducible(TREFOIL, IrredParam(C11, 1.0)))
    assert abs(s - SQRT3) < 1e-12


def test_semisimplify_rejects_irreducible():
    with pytest.raises(NotReducibleError):
        semisimplify(build_irreducible(TREFOIL, IrredParam(C11, 2.0)))


# -------------------------------------------------------------- double ratio


def test_double_ratio_round_trip_plain():
    r = 0.25 + 0.5j
    rec = double_ratio(build_irreducible(TREFOIL, IrredParam(C11, r)))
    assert rec.component == C11
    assert abs(rec.r - r) < 1e-12


def test_double_ratio_conjugation_invariant():
    rng = random.Random(15)
    for m, n in coprime_pairs(8, lo=2):
        kt = KnotType(m, n)
        comps = [IrrComponent(k, kp) for k in range(1, m) for kp in range(1, n) if (k - kp) % 2 == 0]
        for comp in comps:
            for _ in range(5):
                r = sample_ratio(rng, avoid_endpoints=True)
                pair = conjugate_pair(build_irreducible(kt, IrredParam(comp, r)), bounded_unimodular(rng))
                rec = double_ratio(pair)
                assert rec.component == comp
                assert abs(rec.r - r) <= 1e-8


def test_double_ratio_survives_manual_eigen_flip():
    # conjugating by the basis swap presents A as diag(1/lam, lam); the
    # canonical output must be unchanged
    r = -0.7 + 1.3j
    pair = build_irreducible(TREFOIL, IrredParam(C11, r))
    swap = UniMat(0.0, 1.0, -1.0, 0.0)
    rec = double_ratio(conjugate_pair(pair, swap))
    assert rec.component == C11
    assert abs(rec.r - r) < 1e-10


def test_double_ratio_rejects_reducible():
    with pytest.raises(NotIrreducibleError):
        double_ratio(build_irreducible(TREFOIL, IrredParam(C11, 1.0)))


def test_double_ratio_rejects_off_family_eigenvalues():
    # a split pair with generic eigenvalues is reducible for the default
    # relation tolerance; force it through with a loose one and the
    # root-of-unity guard must fire
    q = 1.17
    pair = RepPair(UniMat.diag(q, 1 / q), UniMat.diag(q ** (2 / 3), q ** (-2 / 3)), TREFOIL)
    loose = Tolerances(relation=10.0, match=1e-8)
    with pytest.raises((EigenvalueNotRootOfUnityError, NotIrreducibleError)):
        double_ratio(pair, loose)


# ------------------------------------------------------------------ characters


def test_character_eval_examples():
    pair = build_irreducible(TREFOIL, IrredParam(C11, 2.0))
    assert character_eval(pair, "x") == pair.A.trace
    assert character_eval(pair, "") == 2.0
    assert abs(character_eval(pair, "xy") - (-3.0 * SQRT3)) < 1e-12
    assert abs(character_eval(pair, "xX") - 2.0) < 1e-12
    with pytest.raises(ValueError):
        character_eval(pair, "xz")


def test_character_conjugation_invariance():
    rng = random.Random(31)
    alphabet = "xXyY"
    for _ in range(60):
        kt = KnotType(3, 5)
        r = sample_ratio(rng, avoid_endpoints=True)
        pair = build_irreducible(kt, IrredParam(IrrComponent(2, 4), r))
        moved = conjugate_pair(pair, bounded_unimodular(rng))
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 8)))
        assert abs(character_eval(moved, word) - character_eval(pair, word)) <= 1e-8


def test_component_eigenvalues_unit_roots():
    lam, mu = component_eigenvalues(TREFOIL, C11)
    assert abs(lam - 1j) < 1e-15
    assert abs(mu - cmath.exp(1j * math.pi / 3.0)) < 1e-15
