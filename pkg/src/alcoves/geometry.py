"""
Exact plane geometry for rank-2 affine types.

Points of V* are stored in simple-coroot coordinates as tuples of Fractions.
The affine root beta = alpha + k delta defines the affine function
g_beta(p) = <p, alpha> + k, and its hyperplane H_beta is the zero set of
g_beta.  The base alcove is the dominant one, with vertices 0 and
omega_i^vee / c_i (c_i the coefficient of alpha_i in theta); every positive
affine root is positive on its interior.  The element t_lambda u acts by
p |-> u^vee p + lambda, so that g_{w beta}(w p) = g_beta(p).

Floats appear only in :class:`PlaneEmbedding`, which turns coroot coordinates
into Euclidean ones for drawing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Sequence

from .cartan import AlcoveError, CartanDatum
from .roots import AffineRoot
from .weyl import WeylElement

Point = tuple[Fraction, ...]


class GeometryError(AlcoveError):
    pass


def _require_rank2(datum: CartanDatum) -> None:
    if datum.rank != 2:
        raise GeometryError(f"only rank-2 affine types can be drawn, not {datum.label()}")


def evaluate(datum: CartanDatum, beta: AffineRoot, p: Sequence[Fraction]) -> Fraction:
    """g_beta(p) = <p, alpha> + k."""
    a = datum.finite_matrix
    r = datum.rank
    value = Fraction(beta.level)
    for i in range(r):
        if p[i]:
            value += p[i] * sum(a[i][j] * beta.finite[j] for j in range(r))
    return value


@cache
def base_vertices(datum: CartanDatum) -> tuple[Point, ...]:
    """Vertices of a_0, indexed so that vertex i is opposite the type-i panel."""
    from .weyl import _inverse

    r = datum.rank
    inv = _inverse(datum.finite_matrix)
    out: list[Point] = [tuple(Fraction(0) for _ in range(r))]
    for i in range(r):
        c = datum.highest_root[i]
        # omega_i^vee has coroot coordinates given by row i of A^{-1}
        out.append(tuple(inv[i][k] / c for k in range(r)))
    return tuple(out)


def act(w: WeylElement, p: Sequence[Fraction]) -> Point:
    m = w.coroot_matrix
    r = len(p)
    return tuple(
        sum((m[i][j] * p[j] for j in range(r)), Fraction(0)) + w.translation[i]
        for i in range(r)
    )


def alcove_vertices(w: WeylElement) -> tuple[Point, ...]:
    return tuple(act(w, p) for p in base_vertices(w.datum))


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    return tuple(sum((p[k] for p in points), Fraction(0)) / n for k in range(len(points[0])))


def _orient(a: Point, b: Point, c: Point) -> int:
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (det > 0) - (det < 0)


def geometric_positive_side(u: WeylElement, i: int) -> bool:
    """Side test from coordinates alone: is u a_0 on the same side of its
    type-i panel line as a_0?  Rank 2 only."""
    _require_rank2(u.datum)
    verts = alcove_vertices(u)
    panel = [p for k, p in enumerate(verts) if k != i]
    here = centroid(verts)
    there = centroid(base_vertices(u.datum))
    s_here = _orient(panel[0], panel[1], here)
    s_there = _orient(panel[0], panel[1], there)
    if s_there == 0:
        raise GeometryError("base centroid on a panel line")
    return s_here == s_there


@dataclass(frozen=True)
class PlaneEmbedding:
    """Euclidean images of the simple coroots, alpha_1^vee = (1, 0)."""

    datum: CartanDatum
    e1: tuple[float, float]
    e2: tuple[float, float]

    def point(self, p: Sequence[Fraction]) -> tuple[float, float]:
        x = float(p[0]) * self.e1[0] + float(p[1]) * self.e2[0]
        y = float(p[0]) * self.e1[1] + float(p[1]) * self.e2[1]
        return (x, y)

    def functional(self, alpha: Sequence[int]) -> tuple[float, float]:
        """The vector n with n . point(p) = <p, alpha>."""
        a = self.datum.finite_matrix
        row = [sum(a[i][j] * alpha[j] for j in range(2)) for i in range(2)]
        # solve [e1 e2]^T n = row
        (a11, a21), (a12, a22) = self.e1, self.e2
        det = a11 * a22 - a12 * a21
        nx = (row[0] * a22 - row[1] * a21) / det
        ny = (a11 * row[1] - a12 * row[0]) / det
        return (nx, ny)


def embedding(datum: CartanDatum) -> PlaneEmbedding:
    _require_rank2(datum)
    a = datum.finite_matrix
    d = datum.finite_symmetrizers
    gram = [[Fraction(a[i][j], d[j]) for j in range(2)] for i in range(2)]
    scale = gram[0][0]
    g12 = gram[0][1] / scale
    g22 = gram[1][1] / scale
    return PlaneEmbedding(datum, (1.0, 0.0), (float(g12), math.sqrt(float(g22 - g12 * g12))))


def alcove_polygon(w: WeylElement) -> list[Point]:
    """Exact vertices of w a_0 in coroot coordinates."""
    _require_rank2(w.datum)
    return list(alcove_vertices(w))
