"""
Deterministic SVG pictures of rank-2 alcove arrangements.

All geometry is exact until the final coordinate strings, which use six
decimals.  The output depends only on the scene.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from .cartan import CartanDatum
from .folded import FoldedWalk
from .geometry import (
    PlaneEmbedding,
    _require_rank2,
    alcove_vertices,
    centroid,
    embedding,
)
from .roots import AffineRoot, format_linear, is_positive
from .weyl import WeylElement, identity

GREEN = "#2e9e44"
YELLOW = "#e8b923"
PURPLE = "#8e44ad"
PINK = "#ff5fa2"
ORANGE = "#f28c28"
FOLD_COLORS = (PINK, ORANGE)
FAMILY_COLORS = ("#1f5fbf", "#c8302c")
OTHER_COLOR = "#555555"
SCALE = 120.0


@dataclass(frozen=True)
class WalkLayer:
    walk: FoldedWalk
    color: str = GREEN


@dataclass(frozen=True)
class Scene:
    datum: CartanDatum
    window: int = 2
    walks: tuple[WalkLayer, ...] = ()
    labels: tuple[tuple[WeylElement, str], ...] = ()
    hyperplane_labels: bool = True
    title: str = ""

    def __post_init__(self):
        _require_rank2(self.datum)


def _num(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _region(emb: PlaneEmbedding, window: int) -> list[tuple[float, float]]:
    """Vertices of {x : |<x, alpha>| <= window for all positive alpha}."""
    lines = []
    for alpha in emb.datum.positive_roots:
        n = emb.functional(alpha)
        lines.append((n, float(window)))
        lines.append(((-n[0], -n[1]), float(window)))
    pts = []
    for (n1, c1), (n2, c2) in itertools.combinations(lines, 2):
        det = n1[0] * n2[1] - n1[1] * n2[0]
        if abs(det) < 1e-12:
            continue
        x = (c1 * n2[1] - c2 * n1[1]) / det
        y = (n1[0] * c2 - n2[0] * c1) / det
        if all(n[0] * x + n[1] * y <= c + 1e-9 for n, c in lines):
            pts.append((x, y))
    return pts


def _clip(n: tuple[float, float], c: float, box: tuple[float, float, float, float]):
    """Segment of the line n.x = c inside the box, or None."""
    x0, y0, x1, y1 = box
    pts = []
    if abs(n[1]) > 1e-12:
        for x in (x0, x1):
            y = (c - n[0] * x) / n[1]
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if abs(n[0]) > 1e-12:
        for y in (y0, y1):
            x = (c - n[1] * y) / n[0]
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) > 1e-9 or abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def hyperplane_label(alpha: Sequence[int], k: int) -> str:
    """Name of {<x, alpha> + k = 0} by its positive affine root."""
    beta = AffineRoot(tuple(alpha), k)
    if not is_positive(beta):
        beta = -beta
    return f"H_{{{format_linear(beta.finite, beta.level)}}}"


def render_svg(scene: Scene) -> str:
    datum = scene.datum
    emb = embedding(datum)
    region = _region(emb, scene.window)
    xs = [p[0] for p in region]
    ys = [p[1] for p in region]
    pad = 0.35
    box = (min(xs), min(ys), max(xs), max(ys))
    vx0, vy0, vx1, vy1 = box[0] - pad, box[1] - pad, box[2] + pad, box[3] + pad

    def sx(x: float) -> str:
        return _num((x - vx0) * SCALE)

    def sy(y: float) -> str:
        return _num((vy1 - y) * SCALE)

    def pt(p: Sequence[Fraction]) -> tuple[float, float]:
        return emb.point(p)

    width = _num((vx1 - vx0) * SCALE)
    height = _num((vy1 - vy0) * SCALE)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if scene.title:
        out.append(f"<title>{escape(scene.title)}</title>")
    out.append(
        "<defs>"
        + "".join(
            f'<marker id="arrow{k}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
            f'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{color}"/></marker>'
            for k, color in enumerate((GREEN, YELLOW, PURPLE, PINK, ORANGE))
        )
        + "</defs>"
    )
    marker_of = {GREEN: 0, YELLOW: 1, PURPLE: 2, PINK: 3, ORANGE: 4}

    # base alcove
    base = [pt(p) for p in alcove_vertices(identity(datum))]
    out.append(
        '<polygon points="' + " ".join(f"{sx(x)},{sy(y)}" for x, y in base)
        + '" fill="#dddddd" stroke="none"/>'
    )

    # hyperplanes
    out.append('<g id="hyperplanes" stroke-width="1">')
    for idx, alpha in enumerate(datum.positive_roots):
        color = FAMILY_COLORS[idx] if idx < len(FAMILY_COLORS) else OTHER_COLOR
        n = emb.functional(alpha)
        for k in range(-scene.window, scene.window + 1):
            seg = _clip(n, float(-k), box)
            if seg is None:
                continue
            (x0, y0), (x1, y1) = seg
            out.append(
                f'<line x1="{sx(x0)}" y1="{sy(y0)}" x2="{sx(x1)}" y2="{sy(y1)}" stroke="{color}"/>'
            )
            if scene.hyperplane_labels:
                out.append(
                    f'<text x="{sx(x1)}" y="{sy(y1)}" font-size="9" fill="{color}">'
                    f"{escape(hyperplane_label(alpha, k))}</text>"
                )
    out.append("</g>")

    # per-alcove labels
    if scene.labels:
        out.append('<g id="labels" font-size="8" text-anchor="middle">')
        for w, text in scene.labels:
            c = pt(centroid(alcove_vertices(w)))
            out.append(f'<text x="{sx(c[0])}" y="{sy(c[1])}">{escape(text)}</text>')
        out.append("</g>")

    # walks
    for layer_index, layer in enumerate(scene.walks):
        fw = layer.walk
        out.append(f'<g id="walk{layer_index}" fill="none" stroke-width="2">')
        fold_count = 0
        for j, step in enumerate(fw.steps):
            here = alcove_vertices(fw.alcoves[j])
            c0 = pt(centroid(here))
            if step.kind.is_fold:
                color = FOLD_COLORS[fold_count % len(FOLD_COLORS)]
                fold_count += 1
                panel = [p for k, p in enumerate(here) if k != step.panel_type]
                mid = pt(centroid(panel))
                tip = (c0[0] + 0.8 * (mid[0] - c0[0]), c0[1] + 0.8 * (mid[1] - c0[1]))
                out.append(
                    f'<path d="M{sx(c0[0])},{sy(c0[1])} L{sx(tip[0])},{sy(tip[1])} '
                    f'L{sx(c0[0])},{sy(c0[1])}" stroke="{color}" '
                    f'marker-end="url(#arrow{marker_of[color]})"/>'
                )
            else:
                c1 = pt(centroid(alcove_vertices(fw.alcoves[j + 1])))
                out.append(
                    f'<line x1="{sx(c0[0])}" y1="{sy(c0[1])}" x2="{sx(c1[0])}" y2="{sy(c1[1])}" '
                    f'stroke="{layer.color}" marker-end="url(#arrow{marker_of.get(layer.color, 0)})"/>'
                )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
