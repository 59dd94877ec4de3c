"""Matplotlib rendering of the incidence diagram (report path).

Kept separate from the byte-deterministic SVG emitter; this renderer is for
human-facing PNG/PDF output and shares the arc geometry with it.
"""

from __future__ import annotations

import math

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .emit import FigureSpec, arc_layout
from .variety import VarietyDescription

__all__ = ["render_variety", "save_figure"]


def render_variety(v: VarietyDescription, spec: FigureSpec = FigureSpec()) -> Figure:
    arcs = arc_layout(v, spec)
    fig = Figure(figsize=(spec.width / 96.0, spec.height / 96.0))
    FigureCanvasAgg(fig)
    ax = fig.subplots()
    ax.axhline(0.0, color="black", lw=1.4, zorder=1)
    top = 0.0
    for i, arc in enumerate(arcs):
        center = (arc.s_left + arc.s_right) / 2.0
        radius = (arc.s_right - arc.s_left) / 2.0
        theta = [math.pi * j / 128.0 for j in range(129)]
        xs = [center + radius * math.cos(t) for t in theta]
        ys = [radius * math.sin(t) for t in theta]
        color = f"C{i % 10}"
        ax.plot(xs, ys, color=color, lw=1.4, zorder=2)
        ax.annotate(
            arc.label,
            (center, radius),
            textcoords="offset points",
            xytext=(0, 4),
            ha="center",
            fontsize=9,
            color=color,
        )
        top = max(top, radius)
    for s, _folded, _comp in v.incidence():
        ax.plot([s], [0.0], "o", color="black", ms=4, zorder=3)
        ax.annotate(
            f"{s:.3f}",
            (s, 0.0),
            textcoords="offset points",
            xytext=(0, -14),
            ha="center",
            fontsize=8,
        )
    ax.set_xlim(spec.s_min, spec.s_max)
    ax.set_ylim(-0.35 * max(top, 1.0), top * 1.15 + 0.2)
    ax.set_yticks([])
    ax.set_xlabel("s (coordinate on the reducible line)")
    ax.set_title(f"character variety of the ({v.kt.m},{v.kt.n}) torus knot group")
    fig.tight_layout()
    return fig


def save_figure(v: VarietyDescription, path: str, spec: FigureSpec = FigureSpec(), dpi: int = 150) -> None:
    render_variety(v, spec).savefig(path, dpi=dpi)
