"""Straight-line SVG drawings via barycentric (Tutte) coordinates."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .embed import EmbeddedGraph

SIZE = 600
MARGIN = 30


def tutte_layout(g: EmbeddedGraph, outer: Sequence[int] | None = None) -> np.ndarray:
    """Positions in the unit square; ``outer`` (default: face 0) is pinned to a convex polygon."""
    if outer is None:
        outer = g.faces[0].walk
    outer = list(dict.fromkeys(outer))
    n = g.n
    pos = np.zeros((n, 2))
    k = len(outer)
    for i, v in enumerate(outer):
        a = 2 * math.pi * i / k
        pos[v] = (0.5 + 0.5 * math.cos(a), 0.5 - 0.5 * math.sin(a))
    pinned = set(outer)
    free = [v for v in range(n) if v not in pinned]
    if not free:
        return pos
    idx = {v: i for i, v in enumerate(free)}
    lap = np.zeros((len(free), len(free)))
    rhs = np.zeros((len(free), 2))
    for v in free:
        r = idx[v]
        lap[r, r] = g.degree(v)
        for u in g.neighbors(v):
            if u in idx:
                lap[r, idx[u]] -= 1
            else:
                rhs[r] += pos[u]
    pos[free] = np.linalg.solve(lap, rhs)
    return pos


def svg_drawing(
    g: EmbeddedGraph,
    highlight: Iterable[int] | None = None,
    *,
    labels: bool = True,
) -> str:
    """SVG text; consecutive vertices of ``highlight`` (a cycle) are drawn as thick red edges."""
    pos = tutte_layout(g) * (SIZE - 2 * MARGIN) + MARGIN
    hl: set[frozenset[int]] = set()
    if highlight is not None:
        cyc = list(highlight)
        hl = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for u, v in g.edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        if frozenset((u, v)) in hl:
            style = 'stroke="#d62728" stroke-width="3" class="cycle"'
        else:
            style = 'stroke="#888888" stroke-width="1"'
        parts.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" {style}/>')
    for v in range(g.n):
        x, y = pos[v]
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="black"/>')
        if labels:
            parts.append(f'<text x="{x + 6:.2f}" y="{y - 6:.2f}" font-size="10">{v}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
