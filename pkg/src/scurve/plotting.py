"""Matplotlib renderings: chord diagrams and census summaries."""

from __future__ import annotations

import math
from collections import Counter
from pathlib import Path
from typing import Mapping

from matplotlib.figure import Figure

from .curve import ChordDiagram
from .splice import ReductivityResult


def chord_figure(diagram: ChordDiagram, title: str = "") -> Figure:
    fig = Figure(figsize=(4, 4))
    ax = fig.add_subplot()
    ax.set_aspect("equal")
    ax.axis("off")
    m = len(diagram.points)
    t = [2 * math.pi * k / 360 for k in range(361)]
    ax.plot([math.cos(a) for a in t], [math.sin(a) for a in t], color="black", lw=1)
    if m:
        xy = [(math.cos(math.pi / 2 - 2 * math.pi * i / m), math.sin(math.pi / 2 - 2 * math.pi * i / m))
              for i in range(m)]
        for label, p, q in diagram.chords:
            ax.plot([xy[p][0], xy[q][0]], [xy[p][1], xy[q][1]], lw=1.2)
        for i, (x, y) in enumerate(xy):
            ax.plot([x], [y], "o", color="black", ms=3)
            ax.annotate(diagram.points[i], (1.12 * x, 1.12 * y), ha="center", va="center", fontsize=8)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    if title:
        ax.set_title(title, fontsize=9)
    return fig


def save_chord_svg(diagram: ChordDiagram, path: str | Path, title: str = "") -> Path:
    path = Path(path)
    chord_figure(diagram, title).savefig(path, format="svg")
    return path


def census_figure(counts: Mapping[int, int], reduced: Mapping[int, int] | None = None) -> Figure:
    fig = Figure(figsize=(5, 3.2))
    ax = fig.add_subplot()
    ns = sorted(counts)
    width = 0.4 if reduced else 0.8
    ax.bar([n - (width / 2 if reduced else 0) for n in ns], [counts[n] for n in ns], width, label="all")
    if reduced:
        rs = sorted(reduced)
        ax.bar([n + width / 2 for n in rs], [reduced[n] for n in rs], width, label="reduced")
        ax.legend(frameon=False)
    ax.set_yscale("log")
    ax.set_xlabel("crossings")
    ax.set_ylabel("curves")
    ax.set_xticks(ns)
    fig.tight_layout()
    return fig


def reductivity_figure(values: Mapping[str, ReductivityResult], crossings: Mapping[str, int]) -> Figure:
    """Stacked bars: reductivity distribution per crossing number."""
    fig = Figure(figsize=(5, 3.2))
    ax = fig.add_subplot()
    table = Counter((crossings[c], str(r)) for c, r in values.items())
    ns = sorted({n for n, _ in table})
    levels = sorted({lvl for _, lvl in table})
    bottom = [0] * len(ns)
    for lvl in levels:
        heights = [table.get((n, lvl), 0) for n in ns]
        ax.bar(ns, heights, bottom=bottom, label=f"r={lvl}")
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("crossings")
    ax.set_ylabel("curves")
    ax.set_xticks(ns)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    return fig


def save_figure(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    return path
