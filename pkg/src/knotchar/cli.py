"""Command line interface.

Subcommands: components, psi, classify, verify, figure, sample, report.
Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 for
usage and validation errors.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
from pathlib import Path

from .emit import FigureSpec, emit_json, emit_svg
from .errors import CharVarietyError
from .harness import bounded_unimodular, run_suite, sample_circle_parameter, sample_ratio
from .matrices import Mat2
from .modular import RED, IrrComponent, validate_knot
from .reps import (
    IrredParam,
    build_irreducible,
    build_reducible,
    classify_reducibility,
    conjugate_pair,
    double_ratio,
    relation_defect,
    semisimplify,
)
from .tolerances import DEFAULT_TOL, Tolerances
from .variety import CharPoint, classify_point, enumerate_variety, psi_irr, psi_of_pair, psi_red

__all__ = ["build_parser", "main", "entry"]


def _cfmt(z: complex) -> str:
    return repr(complex(z)).strip("()")


def _tol_from(args) -> Tolerances:
    tol = getattr(args, "tol", None)
    if tol is None:
        return DEFAULT_TOL
    return Tolerances(membership=tol)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotchar",
        description="SL(2,C) character varieties of torus knot groups <x,y | x^m = y^n>",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_args(sp):
        sp.add_argument("m", type=int, help="first knot index")
        sp.add_argument("n", type=int, help="second knot index (coprime to m)")

    sp = sub.add_parser("components", help="enumerate components and intersections")
    knot_args(sp)
    sp.add_argument("--json", action="store_true", help="emit the JSON document instead of text")
    sp.set_defaults(func=cmd_components)

    sp = sub.add_parser("psi", help="evaluate the trace coordinates of a family member")
    knot_args(sp)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--red", nargs=2, type=float, metavar=("T_RE", "T_IM"),
                       help="reducible family at t = T_RE + i*T_IM")
    group.add_argument("--irr", nargs=4, type=float, metavar=("K", "KP", "R_RE", "R_IM"),
                       help="irreducible component (K, KP) at r = R_RE + i*R_IM")
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("classify", help="find the components containing a point of C^3")
    knot_args(sp)
    for name in ("a_re", "a_im", "b_re", "b_im", "c_re", "c_im"):
        sp.add_argument(name, type=float)
    sp.add_argument("--tol", type=float, default=None, help="membership tolerance (default 1e-9)")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run the randomized verification suite")
    knot_args(sp)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=None, help="membership tolerance (default 1e-9)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("figure", help="write the SVG incidence diagram")
    knot_args(sp)
    sp.add_argument("-o", "--output", required=True, metavar="FILE.svg")
    sp.add_argument("--width", type=int, default=640)
    sp.add_argument("--height", type=int, default=360)
    sp.add_argument("--s-min", type=float, default=-2.2, dest="s_min")
    sp.add_argument("--s-max", type=float, default=2.2, dest="s_max")
    sp.set_defaults(func=cmd_figure)

    sp = sub.add_parser("sample", help="print a random conjugated pair and its classification")
    knot_args(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser(
        "report",
        help="write JSON, CSV tables and SVG/PNG figures into a directory",
    )
    knot_args(sp)
    sp.add_argument("-o", "--output", required=True, metavar="DIR")
    sp.set_defaults(func=cmd_report)

    return parser


def cmd_components(args) -> int:
    kt = validate_knot(args.m, args.n)
    v = enumerate_variety(kt)
    if args.json:
        print(emit_json(v))
        return 0
    counts = v.counts
    print(f"knot ({kt.m},{kt.n}): {counts['irr_lines']} irreducible line(s), "
          f"{counts['intersection_points']} intersection point(s)")
    print("red: the line of split characters, coordinate s")
    for line in v.lines:
        print(f"irr({line.component.k},{line.component.kp}): "
              f"lambda={_cfmt(line.lam)} mu={_cfmt(line.mu)}")
        for rec in line.records:
            print(f"  {rec.endpoint}: l_raw={rec.index.raw} l_folded={rec.index.folded} s={rec.s!r}")
    return 0


def cmd_psi(args) -> int:
    kt = validate_knot(args.m, args.n)
    if args.red is not None:
        point = psi_red(kt, complex(args.red[0], args.red[1]))
    else:
        k, kp = args.irr[0], args.irr[1]
        if k != int(k) or kp != int(kp):
            print("error: K and KP must be integers", file=sys.stderr)
            return 2
        param = IrredParam(IrrComponent(int(k), int(kp)), complex(args.irr[2], args.irr[3]))
        point = psi_irr(kt, param)
    print(f"psi = ({_cfmt(point.a)}, {_cfmt(point.b)}, {_cfmt(point.c)})")
    return 0


def cmd_classify(args) -> int:
    kt = validate_knot(args.m, args.n)
    q = CharPoint(
        complex(args.a_re, args.a_im),
        complex(args.b_re, args.b_im),
        complex(args.c_re, args.c_im),
    )
    matches = classify_point(kt, q, _tol_from(args))
    if not matches:
        print("no matching component")
        return 0
    for comp, value in matches:
        if comp == RED:
            print(f"red s={_cfmt(value)}")
        else:
            print(f"irr({comp.k},{comp.kp}) r={_cfmt(value)}")
    return 0


def cmd_verify(args) -> int:
    kt = validate_knot(args.m, args.n)
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return 2
    report = run_suite(kt, samples=args.samples, seed=args.seed, tol=_tol_from(args))
    print(report.render())
    return 0 if report.all_passed else 1


def cmd_figure(args) -> int:
    kt = validate_knot(args.m, args.n)
    spec = FigureSpec(width=args.width, height=args.height, s_min=args.s_min, s_max=args.s_max)
    text = emit_svg(enumerate_variety(kt), spec)
    Path(args.output).write_text(text, encoding="utf-8")
    print(f"wrote {args.output}")
    return 0


def _print_matrix(name: str, m: Mat2) -> None:
    print(f"{name} =")
    print(f"  [{_cfmt(m.a)}, {_cfmt(m.b)}]")
    print(f"  [{_cfmt(m.c)}, {_cfmt(m.d)}]")


def cmd_sample(args) -> int:
    kt = validate_knot(args.m, args.n)
    rng = random.Random(args.seed)
    v = enumerate_variety(kt)
    irr = [line.component for line in v.lines]
    pick = rng.randrange(len(irr) + 1)
    if pick == 0:
        t = sample_circle_parameter(rng)
        pair = build_reducible(kt, t)
        origin = f"reducible family at t={_cfmt(t)}"
    else:
        comp = irr[pick - 1]
        r = sample_ratio(rng, avoid_endpoints=True)
        pair = build_irreducible(kt, IrredParam(comp, r))
        origin = f"irr({comp.k},{comp.kp}) at r={_cfmt(r)}"
    moved = conjugate_pair(pair, bounded_unimodular(rng))
    print(f"knot ({kt.m},{kt.n}) seed={args.seed}: {origin}, conjugated by a random basis")
    _print_matrix("A", moved.A)
    _print_matrix("B", moved.B)
    print(f"relation defect = {relation_defect(moved):.3e}")
    verdict = classify_reducibility(moved)
    if verdict.reducible:
        print(f"verdict: reducible ({verdict.reason.value})")
        print(f"split coordinate s = {_cfmt(semisimplify(moved))}")
    else:
        recovered = double_ratio(moved)
        print("verdict: irreducible")
        print(f"canonical parameter: irr({recovered.component.k},{recovered.component.kp}) "
              f"r={_cfmt(recovered.r)}")
    point = psi_of_pair(moved)
    print(f"psi = ({_cfmt(point.a)}, {_cfmt(point.b)}, {_cfmt(point.c)})")
    for comp, value in classify_point(kt, point):
        if comp == RED:
            print(f"classified on: red s={_cfmt(value)}")
        else:
            print(f"classified on: irr({comp.k},{comp.kp}) r={_cfmt(value)}")
    return 0


def cmd_report(args) -> int:
    kt = validate_knot(args.m, args.n)
    v = enumerate_variety(kt)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)

    (out / "variety.json").write_text(emit_json(v), encoding="utf-8")
    (out / "variety.svg").write_text(emit_svg(v), encoding="utf-8")

    with (out / "components.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["type", "k", "kp", "lambda_re", "lambda_im", "mu_re", "mu_im", "s_r0", "s_r1"])
        writer.writerow(["red", "", "", "", "", "", "", "", ""])
        for line in v.lines:
            writer.writerow([
                "irr", line.component.k, line.component.kp,
                repr(line.lam.real), repr(line.lam.imag),
                repr(line.mu.real), repr(line.mu.imag),
                repr(line.records[0].s), repr(line.records[1].s),
            ])

    with (out / "intersections.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "k", "kp", "endpoint", "l_raw", "l_folded", "s",
            "psi_a_re", "psi_a_im", "psi_b_re", "psi_b_im", "psi_c_re", "psi_c_im",
        ])
        for rec in v.intersections:
            p = rec.point
            writer.writerow([
                rec.component.k, rec.component.kp, rec.endpoint,
                rec.index.raw, rec.index.folded, repr(rec.s),
                repr(p.a.real), repr(p.a.imag),
                repr(p.b.real), repr(p.b.imag),
                repr(p.c.real), repr(p.c.imag),
            ])

    from .plotting import save_figure  # matplotlib import deferred to the report path

    save_figure(v, str(out / "variety.png"))
    for name in ("variety.json", "components.csv", "intersections.csv", "variety.svg", "variety.png"):
        print(f"wrote {out / name}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CharVarietyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
