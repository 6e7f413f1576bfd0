"""
Alcove walks of arbitrary type, masks, and the root products attached to them.

A walk of type ``[i_1, ..., i_m]`` from a base alcove ``b`` visits the alcoves
``b s_{i_1} ... s_{i_j}``.  Step j crosses the hyperplane of the root
``b s_{i_1} ... s_{i_{j-1}} alpha_{i_j}``; the step is forward exactly when that
root is positive, and the signed crossing root is that root itself.

>>> from alcoves.cartan import datum_from_type
>>> A2 = datum_from_type("A2~")
>>> walk = walk_from_word(A2, [1, 2, 1, 0])
>>> [str(b) for b in step_roots(walk)]
['a1', 'a1+a2', 'a2', 'a1+a2+d']
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .cartan import AlcoveError, CartanDatum
from .polynomial import Polynomial, root_variable_names
from .roots import AffineRoot, is_positive, simple_root
from .weyl import (
    WeylElement,
    Word,
    bruhat_leq,
    demazure_product,
    from_word,
    identity,
    reduced_word,
)


class WalkError(AlcoveError):
    pass


@dataclass(frozen=True)
class Step:
    panel_type: int
    crossing_root: AffineRoot
    forward: bool
    prefix: WeylElement


@dataclass(frozen=True)
class Mask:
    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise WalkError(f"mask bits must be 0 or 1, got {self.bits}")

    @property
    def support(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @classmethod
    def parse(cls, text: str | Sequence[int]) -> Mask:
        if isinstance(text, str):
            chars = [c for c in text if not c.isspace() and c not in ",()[]"]
            if any(c not in "01" for c in chars):
                raise WalkError(f"cannot parse mask {text!r}")
            return cls(tuple(int(c) for c in chars))
        return cls(tuple(int(b) for b in text))


@dataclass(frozen=True)
class Walk:
    datum: CartanDatum
    type_word: Word
    base: WeylElement

    @cached_property
    def alcoves(self) -> tuple[WeylElement, ...]:
        """The m+1 visited alcoves, as group elements, starting with the base."""
        out = [self.base]
        for i in self.type_word:
            out.append(out[-1].times_simple(i))
        return tuple(out)

    @cached_property
    def steps(self) -> tuple[Step, ...]:
        out = []
        for j, i in enumerate(self.type_word):
            prefix = self.alcoves[j]
            beta = prefix.apply(simple_root(self.datum, i))
            out.append(Step(i, beta, is_positive(beta), prefix))
        return tuple(out)

    @property
    def end(self) -> WeylElement:
        return self.alcoves[-1]

    @property
    def end_element(self) -> WeylElement:
        """The element of the type word alone, ignoring the base."""
        return from_word(self.datum, self.type_word)

    def __len__(self) -> int:
        return len(self.type_word)

    def to_json(self) -> dict:
        return {
            "type": self.datum.label(),
            "word": list(self.type_word),
            "base": list(reduced_word(self.base)),
        }


def walk_from_word(datum: CartanDatum, word: Iterable[int], base: WeylElement | None = None) -> Walk:
    word = tuple(word)
    n = datum.rank_affine
    for i in word:
        if not 0 <= i < n:
            raise WalkError(f"letter {i} out of range for {datum.label()}")
    if base is None:
        base = identity(datum)
    elif base.datum != datum:
        raise WalkError("base alcove belongs to another datum")
    return Walk(datum, word, base)


def step_roots(walk: Walk) -> list[AffineRoot]:
    return [s.crossing_root for s in walk.steps]


def concatenate(first: Walk, second: Walk) -> Walk:
    """``first`` followed by ``second`` re-based at the end of ``first``."""
    if first.datum != second.datum:
        raise WalkError("cannot concatenate walks of different types")
    if not second.base.is_identity:
        raise WalkError("the second walk must start at the base alcove")
    return Walk(first.datum, first.type_word + second.type_word, first.base)


def _check_mask(walk: Walk, mask: Mask) -> None:
    if len(mask) != len(walk):
        raise WalkError(f"mask of length {len(mask)} for a walk of length {len(walk)}")


def subexpression(walk: Walk, mask: Mask) -> WeylElement:
    """The masked product w^eps of the type word (the base is not included)."""
    _check_mask(walk, mask)
    x = identity(walk.datum)
    for i, b in zip(walk.type_word, mask.bits):
        if b:
            x = x.times_simple(i)
    return x


def enumerate_masks(walk: Walk, v: WeylElement, bruhat_pruning: bool = False) -> list[Mask]:
    """All masks eps with |eps| = l(v) and w^eps = v, in lexicographic order.

    The search abandons a branch when the remaining steps cannot reach support
    l(v).  With ``bruhat_pruning`` it also requires the partial product x to
    satisfy x^{-1} v <= Demazure product of the remaining letters.
    """
    word = walk.type_word
    m = len(word)
    target = v.length
    datum = walk.datum
    out: list[Mask] = []
    bits: list[int] = []
    suffix_demazure = None
    if bruhat_pruning:
        suffix_demazure = [demazure_product(datum, word[j:]) for j in range(m + 1)]

    def dfs(j: int, x: WeylElement, support: int) -> None:
        if support > target or m - j < target - support:
            return
        if bruhat_pruning and not bruhat_leq(x.inverse() * v, suffix_demazure[j]):
            return
        if j == m:
            if x == v:
                out.append(Mask(tuple(bits)))
            return
        bits.append(0)
        dfs(j + 1, x, support)
        bits[-1] = 1
        dfs(j + 1, x.times_simple(word[j]), support + 1)
        bits.pop()

    dfs(0, identity(datum), 0)
    return out


def root_to_polynomial(datum: CartanDatum, beta: AffineRoot) -> Polynomial:
    names = root_variable_names(datum.rank)
    return Polynomial.linear(names, list(beta.finite) + [beta.level])


def mask_product(walk: Walk, mask: Mask) -> Polynomial:
    """Product of the signed crossing roots over the shown steps."""
    _check_mask(walk, mask)
    names = root_variable_names(walk.datum.rank)
    p = Polynomial.constant(names, 1)
    for step, b in zip(walk.steps, mask.bits):
        if b:
            p = p * root_to_polynomial(walk.datum, step.crossing_root)
    return p


def _braid_sites(datum: CartanDatum, word: Sequence[int]) -> list[tuple[int, int, int]]:
    """Positions where an alternating factor i j i ... of length m_ij starts."""
    sites = []
    for start in range(len(word)):
        i = word[start]
        for j in range(datum.rank_affine):
            if j == i:
                continue
            m = datum.braid_orders[i][j]
            if m is None or start + m > len(word):
                continue
            if all(word[start + k] == (i if k % 2 == 0 else j) for k in range(m)):
                sites.append((start, i, j))
    return sites


def apply_braid_move(datum: CartanDatum, word: Sequence[int], site: tuple[int, int, int]) -> Word:
    start, i, j = site
    m = datum.braid_orders[i][j]
    swapped = tuple(j if k % 2 == 0 else i for k in range(m))
    return tuple(word[:start]) + swapped + tuple(word[start + m:])


def random_equivalent_word(
    w: WeylElement,
    extra_pairs: int,
    seed: int,
    braid_moves: int | None = None,
) -> Word:
    """A seeded non-reduced word for w of length l(w) + 2*extra_pairs.

    Starts from the reduced word, inserts ``extra_pairs`` random s_i s_i pairs,
    then applies up to ``braid_moves`` random braid relations (default 2 per
    pair, none when extra_pairs is 0).
    """
    if extra_pairs < 0:
        raise WalkError("extra_pairs must be nonnegative")
    datum = w.datum
    rng = random.Random(seed)
    word = list(reduced_word(w))
    for _ in range(extra_pairs):
        pos = rng.randint(0, len(word))
        i = rng.randrange(datum.rank_affine)
        word[pos:pos] = [i, i]
    if braid_moves is None:
        braid_moves = 2 * extra_pairs
    result: Word = tuple(word)
    for _ in range(braid_moves):
        sites = _braid_sites(datum, result)
        if not sites:
            break
        result = apply_braid_move(datum, result, rng.choice(sites))
    assert from_word(datum, result) == w
    return result
