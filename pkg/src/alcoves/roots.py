"""
Real affine roots mu + k*delta and their exact arithmetic.

Text form: ``a<i>`` stands for alpha_i (i >= 1) and ``d`` for delta, with
integer coefficients, e.g. ``"-a1-a2+2d"``.

>>> from alcoves.cartan import datum_from_type
>>> A2 = datum_from_type("A2~")
>>> str(simple_action(A2, 0, parse_root("a1", A2)))
'-a2+d'
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .cartan import AlcoveError, CartanDatum, FiniteRoot


class RootError(AlcoveError):
    pass


@dataclass(frozen=True, slots=True)
class AffineRoot:
    """The real affine root ``finite + level * delta``."""

    finite: FiniteRoot
    level: int = 0

    def __neg__(self) -> AffineRoot:
        return AffineRoot(tuple(-c for c in self.finite), -self.level)

    def __str__(self) -> str:
        return format_linear(self.finite, self.level)

    @property
    def is_positive(self) -> bool:
        return is_positive(self)

    def positive(self) -> AffineRoot:
        """The representative of {beta, -beta} lying in R_af^+."""
        return self if is_positive(self) else -self


def is_positive(beta: AffineRoot) -> bool:
    if beta.level != 0:
        return beta.level > 0
    return all(c >= 0 for c in beta.finite)


def _check(datum: CartanDatum, mu: FiniteRoot) -> None:
    if len(mu) != datum.rank or mu not in datum.root_set:
        raise RootError(f"{format_linear(mu, 0)} is not a finite root of {datum.label()}")


def simple_root(datum: CartanDatum, i: int) -> AffineRoot:
    """alpha_i as an affine root; alpha_0 = -theta + delta."""
    if not 0 <= i < datum.rank_affine:
        raise RootError(f"index {i} out of range for {datum.label()}")
    if i == 0:
        return AffineRoot(tuple(-c for c in datum.highest_root), 1)
    return AffineRoot(datum.simple_roots[i - 1], 0)


def _form(datum: CartanDatum, x: Sequence[int], y: Sequence[int]) -> int:
    a, d = datum.finite_matrix, datum.finite_symmetrizers
    r = datum.rank
    return sum(x[i] * d[i] * a[i][j] * y[j] for i in range(r) if x[i] for j in range(r) if y[j])


def pairing(datum: CartanDatum, alpha: FiniteRoot, mu: FiniteRoot) -> int:
    """<alpha^vee, mu> through the symmetrized form."""
    _check(datum, alpha)
    _check(datum, mu)
    value = Fraction(2 * _form(datum, alpha, mu), _form(datum, alpha, alpha))
    if value.denominator != 1:
        raise RootError("non-integral coroot pairing")
    return int(value)


def coroot(datum: CartanDatum, alpha: FiniteRoot) -> tuple[int, ...]:
    """alpha^vee in the simple-coroot basis."""
    _check(datum, alpha)
    norm = _form(datum, alpha, alpha)
    d = datum.finite_symmetrizers
    coords = []
    for c, di in zip(alpha, d):
        q = Fraction(2 * c * di, norm)
        if q.denominator != 1:
            raise RootError("non-integral coroot")
        coords.append(int(q))
    return tuple(coords)


def reflect(datum: CartanDatum, beta: AffineRoot, target: AffineRoot) -> AffineRoot:
    """s_beta(target) for beta = alpha + k delta, target = mu + m delta."""
    alpha, k = beta.finite, beta.level
    mu, m = target.finite, target.level
    c = pairing(datum, alpha, mu)
    return AffineRoot(tuple(x - c * a for x, a in zip(mu, alpha)), m - k * c)


def simple_action(datum: CartanDatum, i: int, beta: AffineRoot) -> AffineRoot:
    return reflect(datum, simple_root(datum, i), beta)


def affine_roots(datum: CartanDatum, max_level: int, positive_only: bool = False) -> Iterator[AffineRoot]:
    """All real affine roots with |level| <= max_level, ordered by level then finite order."""
    for k in range(-max_level, max_level + 1):
        for mu in datum.finite_roots:
            beta = AffineRoot(mu, k)
            if not positive_only or is_positive(beta):
                yield beta


def format_linear(finite: Sequence, level, names: Sequence[str] | None = None) -> str:
    """Print ``sum c_i a_i + level d`` in the root text grammar."""
    coeffs = list(finite) + [level]
    if names is None:
        names = [f"a{i + 1}" for i in range(len(finite))] + ["d"]
    out = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = name if mag == 1 else f"{mag}{name}"
        out.append((sign, body))
    if not out:
        return "0"
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    return text + "".join(s + b for s, b in out[1:])


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(a\d+|d)")


def parse_linear(text: str, rank: int) -> tuple[tuple[int, ...], int]:
    """Parse ``"a1+a2-2d"`` into (finite coordinates, level)."""
    s = text.replace(" ", "")
    if not s:
        raise RootError("empty root text")
    coords = [0] * rank
    level = 0
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (pos > 0 and not m.group(1)):
            raise RootError(f"cannot parse root text {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = sign * (int(m.group(2)) if m.group(2) else 1)
        var = m.group(3)
        if var == "d":
            level += c
        else:
            i = int(var[1:])
            if not 1 <= i <= rank:
                raise RootError(f"variable {var} out of range for rank {rank}")
            coords[i - 1] += c
        pos = m.end()
    return tuple(coords), level


def parse_root(text: str, datum: CartanDatum) -> AffineRoot:
    finite, level = parse_linear(text, datum.rank)
    _check(datum, finite)
    return AffineRoot(finite, level)
