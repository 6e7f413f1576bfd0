"""
Affine Cartan data for untwisted affine types.

A datum is indexed by I_af = {0, ..., n-1}; node 0 is the affine node and the
remaining nodes carry the finite Cartan matrix.  Entries follow the convention
a_ij = <alpha_i^vee, alpha_j>.

Finite roots are integer coordinate vectors in the finite simple-root basis
(length n-1).  The affine simple root alpha_0 is never a coordinate; it is the
affine root (-theta, 1) since delta = alpha_0 + theta.

>>> d = datum_from_type("A2~")
>>> d.matrix
((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
>>> d.highest_root
(1, 1)
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Sequence

MAX_FINITE_ROOTS = 10_000

Matrix = tuple[tuple[int, ...], ...]
FiniteRoot = tuple[int, ...]


class AlcoveError(ValueError):
    """Base class for domain errors raised by this package."""


class CartanError(AlcoveError):
    pass


class UnknownTypeError(CartanError):
    pass


class ShapeError(CartanError):
    pass


class DiagonalError(CartanError):
    pass


class SignError(CartanError):
    pass


class ZeroPatternError(CartanError):
    pass


class SymmetrizabilityError(CartanError):
    pass


class CorankError(CartanError):
    pass


class DefinitenessError(CartanError):
    pass


class UntwistedError(CartanError):
    """Node 0 is not the affine node of an untwisted affine diagram."""


_BRAID_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """Validated affine Cartan datum.

    ``braid_orders[i][j]`` is ``None`` when there is no braid relation between
    s_i and s_j (only for affine A1, where a_01 * a_10 = 4).
    """

    matrix: Matrix
    braid_orders: tuple[tuple[int | None, ...], ...]
    finite_roots: tuple[FiniteRoot, ...]
    highest_root: FiniteRoot
    symmetrizers: tuple[int, ...]
    name: str | None = field(default=None)

    @property
    def rank_affine(self) -> int:
        return len(self.matrix)

    @property
    def rank(self) -> int:
        """Rank of the finite root system (n - 1)."""
        return len(self.matrix) - 1

    @cached_property
    def finite_matrix(self) -> Matrix:
        return tuple(row[1:] for row in self.matrix[1:])

    @cached_property
    def finite_symmetrizers(self) -> tuple[int, ...]:
        return self.symmetrizers[1:]

    @cached_property
    def positive_roots(self) -> tuple[FiniteRoot, ...]:
        return tuple(r for r in self.finite_roots if _is_nonneg(r))

    @cached_property
    def root_set(self) -> frozenset[FiniteRoot]:
        return frozenset(self.finite_roots)

    @cached_property
    def simple_roots(self) -> tuple[FiniteRoot, ...]:
        return tuple(_unit(self.rank, i) for i in range(self.rank))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, CartanDatum):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        label = self.name or "custom"
        return f"CartanDatum({label}, matrix={[list(r) for r in self.matrix]})"

    def label(self) -> str:
        return self.name or "custom"

    def to_json(self) -> dict:
        return {
            "rank": self.rank_affine,
            "matrix": [list(r) for r in self.matrix],
            "theta": list(self.highest_root),
        }


def _unit(n: int, i: int) -> FiniteRoot:
    return tuple(1 if k == i else 0 for k in range(n))


def _is_nonneg(v: Sequence[int]) -> bool:
    return all(c >= 0 for c in v)


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _is_positive_definite(sym: Sequence[Sequence[Fraction]]) -> bool:
    # Sylvester's criterion on the leading principal minors.
    n = len(sym)
    for k in range(1, n + 1):
        if _det([row[:k] for row in sym[:k]]) <= 0:
            return False
    return True


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def _symmetrizers(a: Matrix) -> tuple[int, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    queue.append(j)
                elif d[j] != want:
                    raise SymmetrizabilityError("matrix is not symmetrizable")
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _finite_roots(a0: Matrix) -> tuple[FiniteRoot, ...]:
    r = len(a0)
    simple = [_unit(r, i) for i in range(r)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        mu = queue.popleft()
        for i in range(r):
            c = sum(a0[i][j] * mu[j] for j in range(r))
            if c == 0:
                continue
            nu = tuple(m - c if k == i else m for k, m in enumerate(mu))
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
                if len(seen) > MAX_FINITE_ROOTS:
                    raise DefinitenessError(
                        f"root orbit exceeds {MAX_FINITE_ROOTS} roots; finite part is not of finite type"
                    )
    pos = sorted((x for x in seen if _is_nonneg(x)), key=lambda x: (sum(x), tuple(-c for c in x)))
    neg = [tuple(-c for c in x) for x in pos]
    if len(pos) != len(seen) - len(neg) or set(neg) | set(pos) != seen:
        raise DefinitenessError("root orbit is not closed under negation")
    return tuple(pos) + tuple(neg)


def _highest_root(roots: Sequence[FiniteRoot]) -> FiniteRoot:
    pos = [x for x in roots if _is_nonneg(x)]
    theta = max(pos, key=sum)
    if not all(_is_nonneg([t - b for t, b in zip(theta, beta)]) for beta in pos):
        raise DefinitenessError("no unique highest root")
    return theta


def datum_from_matrix(matrix: Sequence[Sequence[int]], name: str | None = None) -> CartanDatum:
    """Validate an affine generalized Cartan matrix and derive its root data.

    Raises a distinct :class:`CartanError` subclass for each failed check.
    """
    n = len(matrix)
    if n < 2 or any(len(row) != n for row in matrix):
        raise ShapeError("Cartan matrix must be square of size at least 2")
    try:
        a: Matrix = tuple(tuple(int(x) for x in row) for row in matrix)
    except (TypeError, ValueError) as exc:
        raise ShapeError("Cartan matrix entries must be integers") from exc
    if any(int(x) != x for row in matrix for x in row):
        raise ShapeError("Cartan matrix entries must be integers")

    for i in range(n):
        if a[i][i] != 2:
            raise DiagonalError(f"diagonal entry a_{i}{i} = {a[i][i]}, expected 2")
    for i in range(n):
        for j in range(n):
            if i != j and a[i][j] > 0:
                raise SignError(f"off-diagonal entry a_{i}{j} = {a[i][j]} is positive")
    for i in range(n):
        for j in range(n):
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise ZeroPatternError(f"a_{i}{j} and a_{j}{i} disagree on being zero")

    d = _symmetrizers(a)
    sym = [[Fraction(d[i] * a[i][j]) for j in range(n)] for i in range(n)]
    corank = n - _rank(sym)
    if corank != 1:
        raise CorankError(f"matrix has corank {corank}, expected 1")
    for drop in range(n):
        keep = [k for k in range(n) if k != drop]
        sub = [[sym[i][j] for j in keep] for i in keep]
        if not _is_positive_definite(sub):
            raise DefinitenessError(f"principal submatrix without node {drop} is not positive definite")

    for i in range(n):
        for j in range(n):
            if i != j and a[i][j] * a[j][i] > 4:
                raise DefinitenessError(f"a_{i}{j} * a_{j}{i} = {a[i][j] * a[j][i]} is not affine")

    a0 = tuple(row[1:] for row in a[1:])
    roots = _finite_roots(a0)
    theta = _highest_root(roots)
    null = (1,) + theta
    if any(sum(a[i][j] * null[j] for j in range(n)) != 0 for i in range(n)):
        raise UntwistedError("alpha_0 + theta is not a null vector; node 0 is not an untwisted affine node")

    braid = tuple(
        tuple(1 if i == j else _BRAID_ORDER.get(a[i][j] * a[j][i]) for j in range(n))
        for i in range(n)
    )
    return CartanDatum(
        matrix=a,
        braid_orders=braid,
        finite_roots=roots,
        highest_root=theta,
        symmetrizers=d,
        name=name,
    )


def _finite_cartan(letter: str, r: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j], a[j][i] = aij, aji

    if letter in "ABC":
        for i in range(r - 1):
            link(i, i + 1)
        if letter == "B":
            link(r - 2, r - 1, -1, -2)
        elif letter == "C":
            link(r - 2, r - 1, -2, -1)
    elif letter == "D":
        for i in range(r - 2):
            link(i, i + 1)
        link(r - 3, r - 1)
    elif letter == "E":
        # Bourbaki numbering: 1-3-4-5-..., with 2 attached to 4.
        link(0, 2)
        link(1, 3)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)
    return a


_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
MAX_TYPE_RANK = 12

SUPPORTED_TYPES = (
    "A<n>~ (n >= 1)",
    "B<n>~ (n >= 3)",
    "C<n>~ (n >= 2)",
    "D<n>~ (n >= 4)",
    "E6~",
    "E7~",
    "E8~",
    "F4~",
    "G2~",
)


def affine_matrix(finite: Sequence[Sequence[int]]) -> Matrix:
    """Extend a finite Cartan matrix by the untwisted affine node 0."""
    r = len(finite)
    a0: Matrix = tuple(tuple(row) for row in finite)
    roots = _finite_roots(a0)
    theta = _highest_root(roots)
    d = _symmetrizers(a0)
    form = lambda x, y: sum(x[i] * y[j] * d[i] * a0[i][j] for i in range(r) for j in range(r))
    tt = form(theta, theta)
    # a_0j = -<theta^vee, alpha_j>, a_j0 = -<alpha_j^vee, theta>
    row0 = [2] + [-Fraction(2 * form(theta, _unit(r, j)), tt) for j in range(r)]
    col0 = [-Fraction(2 * form(_unit(r, j), theta), 2 * d[j]) for j in range(r)]
    rows = [tuple(int(x) for x in row0)]
    for j in range(r):
        rows.append((int(col0[j]),) + tuple(a0[j]))
    return tuple(rows)


def datum_from_type(name: str) -> CartanDatum:
    """Build the datum for an untwisted affine type label such as ``"A2~"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?(\d+)\s*~\s*", name)
    if m is None:
        raise UnknownTypeError(f"unknown type label {name!r}; supported: {', '.join(SUPPORTED_TYPES)}")
    letter, r = m.group(1).upper(), int(m.group(2))
    ok = (
        letter in _MIN_RANK and _MIN_RANK[letter] <= r <= MAX_TYPE_RANK
    ) or r in _FIXED_RANKS.get(letter, ())
    if not ok:
        raise UnknownTypeError(f"unknown type label {name!r}; supported: {', '.join(SUPPORTED_TYPES)}")
    label = f"{letter}{r}~"
    if letter == "A" and r == 1:
        matrix: Matrix = ((2, -2), (-2, 2))
    else:
        matrix = affine_matrix(_finite_cartan(letter, r))
    return datum_from_matrix(matrix, name=label)


def datum_from_json(obj: dict) -> CartanDatum:
    """Load the ``{"rank", "matrix", "theta"}`` encoding; rank and theta are checked."""
    if "matrix" not in obj:
        raise ShapeError("datum JSON needs a 'matrix' entry")
    datum = datum_from_matrix(obj["matrix"], name=obj.get("name"))
    if "rank" in obj and int(obj["rank"]) != datum.rank_affine:
        raise ShapeError(f"rank {obj['rank']} does not match matrix size {datum.rank_affine}")
    if "theta" in obj and tuple(obj["theta"]) != datum.highest_root:
        raise ShapeError(f"theta {obj['theta']} does not match computed highest root {list(datum.highest_root)}")
    return datum
