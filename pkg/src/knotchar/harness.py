"""Randomized verification suite with deterministic seeding.

Each randomized check derives one generator per sample from
seed XOR global-sample-index, where the global index space assigns a
disjoint block of `samples` indices to every check slot.  Samples are
therefore reproducible and order-independent, and could run in parallel.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .matrices import UniMat, random_unimodular
from .modular import RED, IrrComponent, KnotType, admissible_folded, red_parameter
from .reps import (
    IrredParam,
    build_irreducible,
    build_reducible,
    character_eval,
    conjugate_pair,
    double_ratio,
    relation_defect,
)
from .tolerances import DEFAULT_TOL, Tolerances
from .variety import (
    VarietyDescription,
    classify_point,
    enumerate_variety,
    psi_irr,
    psi_of_pair,
    tangent_red,
)

__all__ = [
    "CheckResult",
    "SuiteReport",
    "run_suite",
    "bounded_unimodular",
    "sample_circle_parameter",
    "sample_ratio",
]

# Relation defect allowed for freshly constructed pairs.
CONSTRUCTOR_TOL = 1e-10
# Lower bound demanded of the reducible tangent at every node.
NODAL_THRESHOLD = 1e-6

_WORD_ALPHABET = "xXyY"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    samples: int
    worst_defect: float
    tolerance: float


@dataclass(frozen=True)
class SuiteReport:
    kt: KnotType
    seed: int
    samples: int
    checks: tuple[CheckResult, ...]
    irr_lines: int
    intersection_points: int

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def render(self) -> str:
        lines = [f"verify knot=({self.kt.m},{self.kt.n}) samples={self.samples} seed={self.seed}"]
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(
                f"check {check.name}: {status} "
                f"(samples={check.samples}, worst={check.worst_defect:.6e}, tol={check.tolerance:g})"
            )
        lines.append(f"counts: irr_lines={self.irr_lines} intersection_points={self.intersection_points}")
        lines.append(f"overall: {'PASS' if self.all_passed else 'FAIL'}")
        return "\n".join(lines)


def _rng(seed: int, slot: int, samples: int, j: int) -> random.Random:
    return random.Random(seed ^ (slot * samples + j))


def bounded_unimodular(rng: random.Random, max_norm: float = 2.0) -> UniMat:
    """Random unimodular matrix with bounded entries.

    Rejecting large entries caps the conditioning of the conjugation, which
    keeps the relation defect of conjugated pairs well below the 1e-8 gate
    (the defect grows roughly like eps times the cube of the conditioning).
    """
    for _ in range(100):
        p = random_unimodular(rng)
        if p.max_norm() <= max_norm:
            return p
    return random_unimodular(rng)


def sample_circle_parameter(rng: random.Random) -> complex:
    """t near the unit circle: random angle, small radial jitter."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    radius = math.exp(rng.uniform(-0.05, 0.05))
    return complex(radius * math.cos(theta), radius * math.sin(theta))


def sample_ratio(rng: random.Random, avoid_endpoints: bool = False) -> complex:
    """Complex Gaussian ratio, truncated to |r| <= 2 so the eigenframe of
    the built pair stays well conditioned; optionally kept 1e-3 away from
    the closure points {0, 1}."""
    while True:
        r = complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        if abs(r) > 2.0:
            continue
        if not avoid_endpoints or (abs(r) > 1e-3 and abs(r - 1.0) > 1e-3):
            return r


def _random_pair(kt: KnotType, irr: list[IrrComponent], rng: random.Random):
    """Random constructed pair: (pair, kind, component_or_None, parameter)."""
    pick = rng.randrange(len(irr) + 1)
    if pick == 0:
        t = sample_circle_parameter(rng)
        return build_reducible(kt, t), "red", None, t
    comp = irr[pick - 1]
    r = sample_ratio(rng, avoid_endpoints=True)
    return build_irreducible(kt, IrredParam(comp, r)), "irr", comp, r


def _random_word(rng: random.Random, max_len: int = 8) -> str:
    return "".join(rng.choice(_WORD_ALPHABET) for _ in range(rng.randint(0, max_len)))


def run_suite(kt: KnotType, samples: int = 100, seed: int = 0, tol: Tolerances = DEFAULT_TOL) -> SuiteReport:
    """Run every randomized and exhaustive check; failures are reported,
    never raised."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    variety = enumerate_variety(kt)
    irr = [line.component for line in variety.lines]
    checks = [
        _check_constructors(kt, irr, samples, seed, slot=0),
        _check_conjugation(kt, irr, samples, seed, slot=1, tol=tol),
        _check_double_ratio(kt, irr, samples, seed, slot=2, tol=tol),
        _check_endpoints(kt, variety, tol),
        _check_classification(kt, irr, samples, seed, slot=4, tol=tol),
        _check_nodal(kt, variety),
        _check_counts(kt, variety),
    ]
    return SuiteReport(
        kt=kt,
        seed=seed,
        samples=samples,
        checks=tuple(checks),
        irr_lines=len(variety.lines),
        intersection_points=2 * len(variety.lines),
    )


def _check_constructors(kt, irr, samples, seed, slot) -> CheckResult:
    worst = 0.0
    for j in range(samples):
        rng = _rng(seed, slot, samples, j)
        pair, _, _, _ = _random_pair(kt, irr, rng)
        worst = max(worst, relation_defect(pair))
    return CheckResult("constructor_soundness", worst <= CONSTRUCTOR_TOL, samples, worst, CONSTRUCTOR_TOL)


def _check_conjugation(kt, irr, samples, seed, slot, tol) -> CheckResult:
    worst = 0.0
    for j in range(samples):
        rng = _rng(seed, slot, samples, j)
        pair, _, _, _ = _random_pair(kt, irr, rng)
        word = _random_word(rng)
        moved = conjugate_pair(pair, bounded_unimodular(rng))
        worst = max(worst, abs(character_eval(moved, word) - character_eval(pair, word)))
        worst = max(worst, psi_of_pair(moved).max_diff(psi_of_pair(pair)))
    return CheckResult("conjugation_invariance", worst <= tol.match, samples, worst, tol.match)


def _check_double_ratio(kt, irr, samples, seed, slot, tol) -> CheckResult:
    if not irr:
        return CheckResult("double_ratio_roundtrip", True, 0, 0.0, tol.match)
    worst = 0.0
    for j in range(samples):
        rng = _rng(seed, slot, samples, j)
        comp = irr[rng.randrange(len(irr))]
        r = sample_ratio(rng, avoid_endpoints=True)
        pair = conjugate_pair(build_irreducible(kt, IrredParam(comp, r)), bounded_unimodular(rng))
        recovered = double_ratio(pair, tol)
        defect = abs(recovered.r - r) if recovered.component == comp else math.inf
        worst = max(worst, defect)
    return CheckResult("double_ratio_roundtrip", worst <= tol.match, samples, worst, tol.match)


def _check_endpoints(kt, variety: VarietyDescription, tol) -> CheckResult:
    worst = 0.0
    count = 0
    for line in variety.lines:
        rec0, rec1 = line.records
        worst = max(worst, psi_irr(kt, IrredParam(line.component, 0.0)).max_diff(rec0.point))
        worst = max(worst, psi_irr(kt, IrredParam(line.component, 1.0)).max_diff(rec1.point))
        count += 2
    return CheckResult("endpoint_consistency", worst <= tol.membership, count, worst, tol.membership)


def _check_classification(kt, irr, samples, seed, slot, tol) -> CheckResult:
    worst = 0.0
    for j in range(samples):
        rng = _rng(seed, slot, samples, j)
        pair, kind, comp, param = _random_pair(kt, irr, rng)
        point = psi_of_pair(pair)
        matches = classify_point(kt, point, tol)
        if kind == "red":
            expected_s = param + 1.0 / param
            ok = len(matches) == 1 and matches[0][0] == RED
            defect = abs(matches[0][1] - expected_s) if ok else math.inf
        else:
            ok = len(matches) == 1 and matches[0][0] == comp
            defect = abs(matches[0][1] - param) if ok else math.inf
        worst = max(worst, defect)
    return CheckResult("classification_roundtrip", worst <= tol.match, samples, worst, tol.match)


def _check_nodal(kt, variety: VarietyDescription) -> CheckResult:
    # Defect is threshold minus the smallest tangent component over all
    # nodes; negative values show the margin, anything above 0 fails.
    worst = -math.inf
    count = 0
    for rec in variety.intersections:
        tangent = tangent_red(kt, red_parameter(kt, rec.index))
        smallest = min(abs(tangent[0]), abs(tangent[1]))
        worst = max(worst, NODAL_THRESHOLD - smallest)
        count += 1
    if count == 0:
        worst = 0.0
    return CheckResult("nodal_transversality", worst <= 0.0, count, worst, 0.0)


def _check_counts(kt, variety: VarietyDescription) -> CheckResult:
    expected_lines = (kt.m - 1) * (kt.n - 1) // 2
    expected_points = (kt.m - 1) * (kt.n - 1)
    folded = sorted(rec.index.folded for rec in variety.intersections)
    defect = float(
        abs(len(variety.lines) - expected_lines)
        + abs(2 * len(variety.lines) - expected_points)
        + len(set(folded) ^ set(admissible_folded(kt)))
        + (len(folded) - len(set(folded)))
    )
    return CheckResult("component_counts", defect == 0.0, 1 + len(folded), defect, 0.0)
