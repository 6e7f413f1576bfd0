"""
Affine Weyl group elements in canonical form w = t_lambda * u.

``u`` is the integer matrix of the finite part acting on the finite
simple-root basis (column j is the image of alpha_j) and ``lambda`` is a vector
in the simple-coroot basis.  An element acts on affine roots by

    mu + m delta  |->  u(mu) + (m - <lambda, u(mu)>) delta.

Equality is a comparison of (u, lambda), so words never need rewriting.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property
from typing import Iterable, Iterator, Sequence

from .cartan import AlcoveError, CartanDatum, Matrix
from .roots import AffineRoot, coroot, is_positive, simple_root

Word = tuple[int, ...]


class WeylError(AlcoveError):
    pass


class _Context:
    """Per-datum constants shared by all elements."""

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        r = datum.rank
        self.r = r
        self.a0 = datum.finite_matrix
        self.d = datum.finite_symmetrizers
        self.form = tuple(tuple(self.d[i] * self.a0[i][j] for j in range(r)) for i in range(r))
        self.form_inv = _inverse(self.form)
        self.simple_roots = tuple(simple_root(datum, i) for i in range(datum.rank_affine))
        self.identity_matrix: Matrix = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


@cache
def _context(datum: CartanDatum) -> _Context:
    return _Context(datum)


def _inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(b[0]) if b else 0
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(len(b)) if row[k]) for j in range(n)) for row in a
    )


def _matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v) if y) for row in a)


def _integral(m) -> Matrix:
    out = []
    for row in m:
        out_row = []
        for x in row:
            if Fraction(x).denominator != 1:
                raise WeylError("non-integral matrix in Weyl group arithmetic")
            out_row.append(int(x))
        out.append(tuple(out_row))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class WeylElement:
    datum: CartanDatum = field(repr=False)
    u: Matrix
    translation: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (
            self.u == other.u
            and self.translation == other.translation
            and (self.datum is other.datum or self.datum == other.datum)
        )

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.u, self.translation, self.datum.matrix))

    @cached_property
    def _ctx(self) -> _Context:
        return _context(self.datum)

    @cached_property
    def _lambda_row(self) -> tuple[int, ...]:
        # <lambda, nu> = sum_j (sum_i lambda_i a_ij) nu_j
        a0, lam, r = self._ctx.a0, self.translation, self._ctx.r
        return tuple(sum(lam[i] * a0[i][j] for i in range(r)) for j in range(r))

    @cached_property
    def coroot_matrix(self) -> Matrix:
        """Matrix of u on the simple-coroot basis, D u D^{-1}."""
        d = self._ctx.d
        return _integral(
            [[Fraction(d[i] * self.u[i][j], d[j]) for j in range(len(d))] for i in range(len(d))]
        )

    def _same_datum(self, other: WeylElement) -> None:
        if not (self.datum is other.datum or self.datum == other.datum):
            raise WeylError("elements belong to different Cartan data")

    def __mul__(self, other: WeylElement) -> WeylElement:
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._same_datum(other)
        shift = _matvec(self.coroot_matrix, other.translation)
        return WeylElement(
            self.datum,
            _matmul(self.u, other.u),
            tuple(a + b for a, b in zip(self.translation, shift)),
        )

    def apply(self, beta: AffineRoot) -> AffineRoot:
        mu = _matvec(self.u, beta.finite)
        return AffineRoot(mu, beta.level - sum(x * y for x, y in zip(self._lambda_row, mu)))

    def inverse(self) -> WeylElement:
        ctx = self._ctx
        r = ctx.r
        # u preserves the symmetrized form B, so u^{-1} = B^{-1} u^T B.
        ut = tuple(tuple(self.u[j][i] for j in range(r)) for i in range(r))
        uinv = _integral(
            [
                [sum(ctx.form_inv[i][k] * sum(ut[k][l] * ctx.form[l][j] for l in range(r)) for k in range(r)) for j in range(r)]
                for i in range(r)
            ]
        )
        e = WeylElement(self.datum, uinv, tuple(0 for _ in range(r)))
        lam = _matvec(e.coroot_matrix, self.translation)
        return WeylElement(self.datum, uinv, tuple(-x for x in lam))

    @property
    def is_identity(self) -> bool:
        return self.u == self._ctx.identity_matrix and not any(self.translation)

    def is_right_descent(self, i: int) -> bool:
        """True iff l(w s_i) < l(w), i.e. w(alpha_i) is a negative root."""
        _check_index(self.datum, i)
        return not is_positive(self.apply(self._ctx.simple_roots[i]))

    def is_left_descent(self, i: int) -> bool:
        _check_index(self.datum, i)
        return not is_positive(self.inverse().apply(self._ctx.simple_roots[i]))

    def right_descents(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.datum.rank_affine) if self.is_right_descent(i))

    def times_simple(self, i: int) -> WeylElement:
        return self * simple(self.datum, i)

    @cached_property
    def reduced_word(self) -> Word:
        """Reduced word built right to left, always stripping the least right descent."""
        word: list[int] = []
        w = self
        n = self.datum.rank_affine
        while not w.is_identity:
            i = next(i for i in range(n) if w.is_right_descent(i))
            word.append(i)
            w = w.times_simple(i)
        return tuple(reversed(word))

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    def inversions(self) -> list[AffineRoot]:
        """beta_j = s_{i_1} ... s_{i_{j-1}} alpha_{i_j} along the reduced word."""
        out = []
        prefix = identity(self.datum)
        for i in self.reduced_word:
            out.append(prefix.apply(self._ctx.simple_roots[i]))
            prefix = prefix.times_simple(i)
        return out

    def __repr__(self) -> str:
        word = "".join(map(str, self.reduced_word)) if self.datum.rank_affine <= 10 else " ".join(map(str, self.reduced_word))
        return f"s_{{{word}}}" if word else "e"

    def __str__(self) -> str:
        return repr(self)


def _check_index(datum: CartanDatum, i: int) -> None:
    if not (isinstance(i, int) and 0 <= i < datum.rank_affine):
        raise WeylError(f"index {i!r} out of range 0..{datum.rank_affine - 1}")


def identity(datum: CartanDatum) -> WeylElement:
    ctx = _context(datum)
    return WeylElement(datum, ctx.identity_matrix, tuple(0 for _ in range(ctx.r)))


@cache
def reflection_element(datum: CartanDatum, finite: tuple[int, ...], level: int) -> WeylElement:
    r = datum.rank
    a0 = datum.finite_matrix
    # s_alpha on root coordinates: column j is alpha_j - <alpha^vee, alpha_j> alpha
    cv = coroot(datum, finite)
    pair = [sum(cv[i] * a0[i][j] for i in range(r)) for j in range(r)]
    u = tuple(tuple(int(row == j) - pair[j] * finite[row] for j in range(r)) for row in range(r))
    # s_{alpha + k delta} = s_alpha t_{k alpha^vee} = t_{-k alpha^vee} s_alpha
    return WeylElement(datum, u, tuple(-level * c for c in cv))


def reflection(datum: CartanDatum, beta: AffineRoot) -> WeylElement:
    return reflection_element(datum, tuple(beta.finite), beta.level)


def simple(datum: CartanDatum, i: int) -> WeylElement:
    _check_index(datum, i)
    return _simple(datum, i)


@cache
def _simple(datum: CartanDatum, i: int) -> WeylElement:
    return reflection(datum, simple_root(datum, i))


def from_word(datum: CartanDatum, word: Iterable[int]) -> WeylElement:
    w = identity(datum)
    for i in word:
        w = w * simple(datum, i)
    return w


def multiply(w1: WeylElement, w2: WeylElement) -> WeylElement:
    return w1 * w2


def length(w: WeylElement) -> int:
    return w.length


def reduced_word(w: WeylElement) -> Word:
    return w.reduced_word


def inversions(w: WeylElement) -> list[AffineRoot]:
    return w.inversions()


def is_right_descent(w: WeylElement, i: int) -> bool:
    return w.is_right_descent(i)


@cache
def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """v <= w in Bruhat order.

    Scans the reduced word of w from the right: for its last letter s,
    if vs < v then v <= w iff vs <= ws, otherwise v <= w iff v <= ws.
    """
    v._same_datum(w)
    while True:
        if v.length > w.length:
            return False
        if w.is_identity:
            return v.is_identity
        if v == w:
            return True
        i = w.reduced_word[-1]
        w = w.times_simple(i)
        if v.is_right_descent(i):
            v = v.times_simple(i)


def palindromic_word(datum: CartanDatum, beta: AffineRoot) -> Word:
    """A reduced palindrome u . i . reverse(u) for the reflection s_beta.

    Conjugates greedily by the least i with l(s_i x s_i) = l(x) - 2.
    """
    x = reflection(datum, beta)
    prefix: list[int] = []
    while x.length > 1:
        target = x.length - 2
        for i in range(datum.rank_affine):
            s = simple(datum, i)
            y = s * x * s
            if y.length == target:
                prefix.append(i)
                x = y
                break
        else:
            raise AssertionError(f"no conjugating simple reflection found for {beta}")
    (middle,) = x.reduced_word
    word = tuple(prefix) + (middle,) + tuple(reversed(prefix))
    assert from_word(datum, word) == reflection(datum, beta)
    return word


def palindromic_words(datum: CartanDatum, beta: AffineRoot) -> list[Word]:
    """Every reduced palindromic word for s_beta, in lexicographic order."""
    out: list[Word] = []

    def descend(x: WeylElement, prefix: tuple[int, ...]) -> None:
        if x.length == 1:
            (middle,) = x.reduced_word
            out.append(prefix + (middle,) + tuple(reversed(prefix)))
            return
        for i in range(datum.rank_affine):
            s = simple(datum, i)
            y = s * x * s
            if y.length == x.length - 2:
                descend(y, prefix + (i,))

    descend(reflection(datum, beta), ())
    return sorted(out)


def elements_up_to_length(datum: CartanDatum, bound: int) -> list[WeylElement]:
    """All w with l(w) <= bound, by length then lexicographic reduced word."""
    layer = [identity(datum)]
    out = list(layer)
    for _ in range(bound):
        nxt = set()
        for w in layer:
            for i in range(datum.rank_affine):
                if not w.is_right_descent(i):
                    nxt.add(w.times_simple(i))
        layer = sorted(nxt, key=lambda w: w.reduced_word)
        out.extend(layer)
    return out


def bruhat_interval_below(w: WeylElement) -> set[WeylElement]:
    """{v : v <= w}, as the products of all subwords of a reduced word."""
    out = {identity(w.datum)}
    for i in w.reduced_word:
        s = simple(w.datum, i)
        out |= {x * s for x in out}
    return out


def demazure_product(datum: CartanDatum, word: Iterable[int]) -> WeylElement:
    """0-Hecke product: the maximum of all subword products."""
    w = identity(datum)
    for i in word:
        if not w.is_right_descent(i):
            w = w.times_simple(i)
    return w


def parse_word(text: str | Sequence[int], datum: CartanDatum | None = None) -> Word:
    """Parse ``"1 2 1 0"`` or ``"1,2,1,0"``; an empty string is the empty word."""
    if isinstance(text, str):
        parts = text.replace(",", " ").split()
        try:
            word = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise WeylError(f"cannot parse word {text!r}") from exc
    else:
        word = tuple(int(i) for i in text)
    if datum is not None:
        for i in word:
            _check_index(datum, i)
    return word


def format_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word))


def all_words(n: int, length: int) -> Iterator[Word]:
    return itertools.product(range(n), repeat=length)
