"""Deterministic JSON and SVG emitters for a variety description.

Both formats are assembled by hand so the byte stream depends only on the
input values: JSON numbers carry 17 significant digits (exact double round
trip), SVG coordinates are written with two fixed decimals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WindowTooSmallError
from .modular import IrrComponent
from .variety import VarietyDescription

__all__ = ["FigureSpec", "ArcGeometry", "arc_layout", "emit_json", "emit_svg"]


def _num(x: float) -> str:
    return f"{x:.17g}"


def _cpair(z: complex) -> str:
    return f"[{_num(z.real)}, {_num(z.imag)}]"


def _ctriple(triple) -> str:
    return "[" + ", ".join(_cpair(z) for z in triple) + "]"


def emit_json(v: VarietyDescription) -> str:
    """Stable-schema JSON document for the enumeration.

    Key order is fixed: m, n, components (red first, then irr entries with
    k, kp, lambda, mu, psi_base, psi_dir, intersections), counts.
    """
    comps = ['{"type": "red"}']
    for line in v.lines:
        recs = []
        for rec in line.records:
            recs.append(
                '{"endpoint": "%s", "l_raw": %d, "l_folded": %d, "s": %s, "psi": %s}'
                % (rec.endpoint, rec.index.raw, rec.index.folded, _num(rec.s), _ctriple(rec.point.triple()))
            )
        comps.append(
            '{"type": "irr", "k": %d, "kp": %d, "lambda": %s, "mu": %s, '
            '"psi_base": %s, "psi_dir": %s, "intersections": [%s]}'
            % (
                line.component.k,
                line.component.kp,
                _cpair(line.lam),
                _cpair(line.mu),
                _ctriple(line.psi_base.triple()),
                _ctriple(line.psi_dir),
                ", ".join(recs),
            )
        )
    counts = '{"irr_lines": %d, "intersection_points": %d}' % (
        len(v.lines),
        2 * len(v.lines),
    )
    return '{"m": %d, "n": %d, "components": [%s], "counts": %s}' % (
        v.kt.m,
        v.kt.n,
        ", ".join(comps),
        counts,
    )


@dataclass(frozen=True)
class FigureSpec:
    """Pixel size and s-window of the incidence figure."""

    width: int = 640
    height: int = 360
    s_min: float = -2.2
    s_max: float = 2.2
    margin: float = 40.0


@dataclass(frozen=True)
class ArcGeometry:
    """One irreducible line drawn as an arc between its two abscissas."""

    component: IrrComponent
    s_left: float
    s_right: float
    label: str


def arc_layout(v: VarietyDescription, spec: FigureSpec) -> list[ArcGeometry]:
    """Arc geometry per component; rejects windows missing any node."""
    for rec in v.intersections:
        if not (spec.s_min <= rec.s <= spec.s_max):
            raise WindowTooSmallError(
                f"s = {rec.s!r} falls outside the window [{spec.s_min}, {spec.s_max}]"
            )
    arcs = []
    for line in v.lines:
        s0, s1 = line.records[0].s, line.records[1].s
        arcs.append(
            ArcGeometry(
                line.component,
                min(s0, s1),
                max(s0, s1),
                f"({line.component.k},{line.component.kp})",
            )
        )
    return arcs


_ARC_COLORS = ("#1f6fb4", "#b44b1f", "#3d8a3d", "#7a4ba0", "#a08830")


def emit_svg(v: VarietyDescription, spec: FigureSpec = FigureSpec()) -> str:
    """SVG 1.1 incidence diagram.

    The reducible line is drawn horizontally across the s-window, every
    irreducible component as a semicircular arc joining its two abscissas
    above the line with a "(k,kp)" label, and every node as a labeled dot.
    """
    arcs = arc_layout(v, spec)
    span = spec.s_max - spec.s_min
    usable = spec.width - 2.0 * spec.margin

    def x_of(s: float) -> float:
        return spec.margin + (s - spec.s_min) / span * usable

    baseline = spec.height - spec.margin
    top = spec.margin

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f"<title>character variety of the ({v.kt.m},{v.kt.n}) torus knot group</title>",
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
        f'<line x1="{spec.margin:.2f}" y1="{baseline:.2f}" x2="{spec.width - spec.margin:.2f}" '
        f'y2="{baseline:.2f}" stroke="black" stroke-width="1.5"/>',
        f'<text x="{spec.width - spec.margin + 4:.2f}" y="{baseline + 4:.2f}" '
        f'font-family="sans-serif" font-size="12">reducible</text>',
    ]
    for i, arc in enumerate(arcs):
        x0, x1 = x_of(arc.s_left), x_of(arc.s_right)
        rx = (x1 - x0) / 2.0
        ry = min(rx, baseline - top)
        color = _ARC_COLORS[i % len(_ARC_COLORS)]
        out.append(
            f'<path d="M {x0:.2f},{baseline:.2f} A {rx:.2f},{ry:.2f} 0 0 1 {x1:.2f},{baseline:.2f}" '
            f'fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{(x0 + x1) / 2.0:.2f}" y="{baseline - ry - 5:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" fill="{color}">{arc.label}</text>'
        )
    for s, _folded, _comp in v.incidence():
        x = x_of(s)
        out.append(f'<circle cx="{x:.2f}" cy="{baseline:.2f}" r="3" fill="black"/>')
        out.append(
            f'<text x="{x:.2f}" y="{baseline + 16:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{s:.3f}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
