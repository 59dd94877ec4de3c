"""Acceptance checks for the whole artifact.

Each test prints one PASS/FAIL line (visible with `pytest -s`); tolerances
are pinned in the assertions.
"""

import cmath
import math
import random
import subprocess
import sys
from contextlib import contextmanager

from knotchar.harness import bounded_unimodular, sample_circle_parameter, sample_ratio
from knotchar.modular import (
    RED,
    IrrComponent,
    KnotType,
    admissible_folded,
    red_parameter,
)
from knotchar.reps import (
    IrredParam,
    build_irreducible,
    build_reducible,
    classify_reducibility,
    conjugate_pair,
    double_ratio,
    relation_defect,
)
from knotchar.variety import (
    CharPoint,
    classify_point,
    enumerate_variety,
    nodal_check,
    psi_irr,
    psi_red,
    tangent_red,
)

SQRT3 = math.sqrt(3.0)


@contextmanager
def criterion(num, desc):
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num:2d}: {desc}")
        raise
    print(f"PASS criterion {num:2d}: {desc}")


def coprime_pairs(limit, lo=1):
    return [
        (m, n)
        for m in range(lo, limit + 1)
        for n in range(lo, limit + 1)
        if math.gcd(m, n) == 1
    ]


def irr_components(m, n):
    return [IrrComponent(k, kp) for k in range(1, m) for kp in range(1, n) if (k - kp) % 2 == 0]


def test_criterion_01_component_count():
    with criterion(1, "component counts match (m-1)(n-1)/2 + 1 for coprime 2<=m<n<=12"):
        for m in range(2, 13):
            for n in range(m + 1, 13):
                if math.gcd(m, n) != 1:
                    continue
                v = enumerate_variety(KnotType(m, n))
                assert len(v.lines) == (m - 1) * (n - 1) // 2
                assert len(v.components) == (m - 1) * (n - 1) // 2 + 1


def test_criterion_02_intersection_count_and_placement():
    with criterion(2, "folded labels partition {l in (0,mn): m∤l, n∤l} for m,n<=12"):
        for m, n in coprime_pairs(12):
            v = enumerate_variety(KnotType(m, n))
            folded = []
            for line in v.lines:
                rec0, rec1 = line.records
                assert rec0.index.folded != rec1.index.folded
                assert abs(rec0.s - rec1.s) > 0
                folded += [rec0.index.folded, rec1.index.folded]
            assert sorted(folded) == admissible_folded(KnotType(m, n))
            assert len(folded) == (m - 1) * (n - 1)


def test_criterion_03_trefoil_golden_values():
    with criterion(3, "trefoil: endpoints s=+-sqrt(3), psi points (0,1,-+sqrt(3)), 1e-9"):
        kt = KnotType(2, 3)
        v = enumerate_variety(kt)
        assert len(v.lines) == 1
        (line,) = v.lines
        rec0, rec1 = line.records
        assert abs(rec1.s - SQRT3) <= 1e-9 and abs(rec0.s + SQRT3) <= 1e-9
        # cross-check both routes: closed irreducible form at r in {0,1}
        # versus the reducible form at t = exp(i pi/6), exp(5 i pi/6)
        for rec, r, t in (
            (rec1, 1.0, cmath.exp(1j * math.pi / 6.0)),
            (rec0, 0.0, cmath.exp(5j * math.pi / 6.0)),
        ):
            expect = CharPoint(0.0, 1.0, -SQRT3 if r == 1.0 else SQRT3)
            assert rec.point.max_diff(expect) <= 1e-9
            assert psi_irr(kt, IrredParam(line.component, r)).max_diff(expect) <= 1e-9
            assert psi_red(kt, t).max_diff(expect) <= 1e-9


def test_criterion_04_endpoint_consistency():
    with criterion(4, "psi_irr(r in {0,1}) equals psi_red(t_l) within 1e-9, (m,n)<=10"):
        for m, n in coprime_pairs(10):
            kt = KnotType(m, n)
            for line in enumerate_variety(kt).lines:
                rec0, rec1 = line.records
                p1 = psi_red(kt, red_parameter(kt, rec1.index))
                p0 = psi_red(kt, red_parameter(kt, rec0.index))
                assert psi_irr(kt, IrredParam(line.component, 1.0)).max_diff(p1) <= 1e-9
                assert psi_irr(kt, IrredParam(line.component, 0.0)).max_diff(p0) <= 1e-9


def _sweep_pairs(rng, kt, per_component=100):
    for _ in range(per_component):
        yield build_reducible(kt, sample_circle_parameter(rng)), None
    for comp in irr_components(kt.m, kt.n):
        for _ in range(per_component):
            r = sample_ratio(rng, avoid_endpoints=True)
            yield build_irreducible(kt, IrredParam(comp, r)), r


def test_criterion_05_relation_soundness():
    with criterion(5, "every constructed pair has relation defect <= 1e-10, (m,n)<=8"):
        rng = random.Random(500)
        for m, n in coprime_pairs(8):
            kt = KnotType(m, n)
            for pair, _ in _sweep_pairs(rng, kt):
                assert relation_defect(pair) <= 1e-10


def test_criterion_06_reducibility_classification():
    with criterion(6, "r not in {0,1} iff irreducible, 100% over the sweep, (m,n)<=8"):
        rng = random.Random(600)
        for m, n in coprime_pairs(8, lo=2):
            kt = KnotType(m, n)
            for comp in irr_components(m, n):
                for _ in range(100):
                    r = sample_ratio(rng, avoid_endpoints=True)
                    assert not classify_reducibility(build_irreducible(kt, IrredParam(comp, r))).reducible
                for r in (0.0, 1.0):
                    assert classify_reducibility(build_irreducible(kt, IrredParam(comp, r))).reducible


def test_criterion_07_double_ratio_round_trip():
    with criterion(7, "double ratio survives random conjugation, <=1e-8 over 1000x3 samples"):
        for seed, (m, n) in ((701, (2, 3)), (702, (3, 5)), (703, (4, 7))):
            rng = random.Random(seed)
            kt = KnotType(m, n)
            comps = irr_components(m, n)
            worst = 0.0
            for _ in range(1000):
                comp = comps[rng.randrange(len(comps))]
                r = sample_ratio(rng, avoid_endpoints=True)
                pair = conjugate_pair(
                    build_irreducible(kt, IrredParam(comp, r)), bounded_unimodular(rng)
                )
                recovered = double_ratio(pair)
                assert recovered.component == comp
                worst = max(worst, abs(recovered.r - r))
            assert worst <= 1e-8


def test_criterion_08_bijectivity_at_sample_scale():
    with criterion(8, "classify_point: exactly one match per component, <=1e-8; off-curve empty"):
        rng = random.Random(800)
        for m, n in coprime_pairs(8):
            kt = KnotType(m, n)
            for _ in range(20):
                t = sample_circle_parameter(rng)
                matches = classify_point(kt, psi_red(kt, t))
                assert len(matches) == 1 and matches[0][0] == RED
                assert abs(matches[0][1] - (t + 1.0 / t)) <= 1e-8
            for comp in irr_components(m, n):
                for _ in range(10):
                    r = sample_ratio(rng, avoid_endpoints=True)
                    matches = classify_point(kt, psi_irr(kt, IrredParam(comp, r)))
                    assert len(matches) == 1 and matches[0][0] == comp
                    assert abs(matches[0][1] - r) <= 1e-8
            # nodes lie on exactly two components, one match per component
            for line in enumerate_variety(kt).lines:
                for rec, r_true in ((line.records[0], 0.0), (line.records[1], 1.0)):
                    matches = classify_point(kt, rec.point)
                    assert len(matches) == 2
                    by_kind = {type(c).__name__: val for c, val in matches}
                    assert abs(by_kind["RedComponent"] - rec.s) <= 1e-8
                    assert abs(by_kind["IrrComponent"] - r_true) <= 1e-8
            for q in (CharPoint(10.0, 10.0, 10.0), CharPoint(0.5 + 2j, -3.0, 7.0)):
                assert classify_point(kt, q) == []


def test_criterion_09_nodal_transversality():
    with criterion(9, "every intersection is a transverse node, (m,n)<=10, margin 1e-6"):
        for m, n in coprime_pairs(10, lo=2):
            kt = KnotType(m, n)
            for rec in enumerate_variety(kt).intersections:
                assert nodal_check(kt, rec)
                tangent = tangent_red(kt, red_parameter(kt, rec.index))
                assert abs(tangent[0]) > 1e-6 and abs(tangent[1]) > 1e-6


def test_criterion_10_tangent_limit_values():
    with criterion(10, "tangent at t=1 equals (n^2, m^2, (n+m)^2) to 1e-10"):
        for m, n in coprime_pairs(10):
            got = tangent_red(KnotType(m, n), 1.0)
            expect = (n * n, m * m, (n + m) * (n + m))
            assert max(abs(g - e) for g, e in zip(got, expect)) <= 1e-10


def test_criterion_11_cli_determinism():
    with criterion(11, "verify 3 5 --samples 500 --seed 1 exits 0, byte-identical twice"):
        cmd = [sys.executable, "-m", "knotchar", "verify", "3", "5", "--samples", "500", "--seed", "1"]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        assert first.returncode == 0
        assert second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout.decode().strip().endswith("overall: PASS")
