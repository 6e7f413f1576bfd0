"""
Folded alcove walks, positive folds, and point counts of open Richardson cells.

A folded walk of type ``[i_1, ..., i_m]`` is recorded by which steps are shown
(crossed) and which are folded.  Its alcoves are the prefix products of the
shown letters, so the epsilon-folded image of a walk is the walk whose shown
steps are the ones marked 1 in epsilon.

Orientation: the base alcove lies on the positive side of every hyperplane.
The alcove u lies on the positive side of its type-i panel exactly when
u(alpha_i) is a positive root.

>>> from alcoves.cartan import datum_from_type
>>> from alcoves.weyl import from_word
>>> A2 = datum_from_type("A2~")
>>> fw = folded_image(walk_from_word(A2, [1, 2, 1, 0]), Mask((1, 0, 0, 1)))
>>> [s.kind.value for s in fw.steps]
['negative-crossing', 'positive-fold', 'negative-fold', 'negative-crossing']
>>> str(point_count(A2, [1, 0], from_word(A2, [])))
'q^2-2*q+1'
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .cartan import AlcoveError, CartanDatum
from .polynomial import Polynomial, Q_NAMES
from .roots import AffineRoot, is_positive, simple_root
from .walks import Mask, Walk, subexpression, walk_from_word
from .weyl import WeylElement, Word, bruhat_leq, from_word, identity, reduced_word


class FoldError(AlcoveError):
    pass


class StepKind(enum.Enum):
    POSITIVE_CROSSING = "positive-crossing"
    NEGATIVE_CROSSING = "negative-crossing"
    POSITIVE_FOLD = "positive-fold"
    NEGATIVE_FOLD = "negative-fold"

    @property
    def is_fold(self) -> bool:
        return self in (StepKind.POSITIVE_FOLD, StepKind.NEGATIVE_FOLD)


class LabelKind(enum.Enum):
    FREE = "free-field-element"
    ZERO = "forced-zero"
    NONZERO = "nonzero-field-element"


class Orientation(enum.Enum):
    BASE = "base"
    TRIVIAL = "trivial"


_LABELS = {
    StepKind.POSITIVE_CROSSING: LabelKind.FREE,
    StepKind.NEGATIVE_CROSSING: LabelKind.ZERO,
    StepKind.POSITIVE_FOLD: LabelKind.NONZERO,
    StepKind.NEGATIVE_FOLD: None,
}


def positive_side(u: WeylElement, i: int) -> bool:
    """Whether u a_0 is on the base-alcove side of its type-i panel."""
    return is_positive(u.apply(simple_root(u.datum, i)))


@dataclass(frozen=True)
class FoldedStep:
    panel_type: int
    kind: StepKind
    hyperplane: AffineRoot
    label_kind: LabelKind | None
    alcove: WeylElement


@dataclass(frozen=True)
class FoldedWalk:
    datum: CartanDatum
    type_word: Word
    shown: tuple[int, ...]
    base: WeylElement

    def __post_init__(self):
        if len(self.shown) != len(self.type_word):
            raise FoldError("fold pattern length does not match the type word")

    @cached_property
    def alcoves(self) -> tuple[WeylElement, ...]:
        out = [self.base]
        for i, b in zip(self.type_word, self.shown):
            out.append(out[-1].times_simple(i) if b else out[-1])
        return tuple(out)

    @cached_property
    def steps(self) -> tuple[FoldedStep, ...]:
        out = []
        for j, (i, b) in enumerate(zip(self.type_word, self.shown)):
            u = self.alcoves[j]
            root = u.apply(simple_root(self.datum, i))
            plus = is_positive(root)
            if b:
                kind = StepKind.NEGATIVE_CROSSING if plus else StepKind.POSITIVE_CROSSING
            else:
                kind = StepKind.POSITIVE_FOLD if plus else StepKind.NEGATIVE_FOLD
            out.append(FoldedStep(i, kind, root.positive(), _LABELS[kind], u))
        return tuple(out)

    @property
    def end(self) -> WeylElement:
        return self.alcoves[-1]

    @property
    def folds(self) -> list[int]:
        """0-based indices of the folded steps."""
        return [j for j, b in enumerate(self.shown) if not b]

    def count_term(self) -> Polynomial:
        q = Polynomial.variable(Q_NAMES, 0)
        term = Polynomial.constant(Q_NAMES, 1)
        for s in self.steps:
            if s.kind is StepKind.POSITIVE_CROSSING:
                term = term * q
            elif s.kind is StepKind.POSITIVE_FOLD:
                term = term * (q - 1)
            elif s.kind is StepKind.NEGATIVE_FOLD:
                raise FoldError("a negatively folded walk has no labels")
        return term

    def to_json(self) -> dict:
        return {
            "type": self.datum.label(),
            "word": list(self.type_word),
            "mask": "".join(map(str, self.shown)),
            "base": list(reduced_word(self.base)),
            "end": list(reduced_word(self.end)),
            "steps": [
                {
                    "panel": s.panel_type,
                    "kind": s.kind.value,
                    "hyperplane": str(s.hyperplane),
                    "label": s.label_kind.value if s.label_kind else None,
                }
                for s in self.steps
            ],
        }


def unfolded(walk: Walk) -> FoldedWalk:
    return FoldedWalk(walk.datum, walk.type_word, (1,) * len(walk), walk.base)


def fold_at(walk: Walk | FoldedWalk, j: int) -> FoldedWalk:
    """Fold step j: the walk stays put there and later alcoves are reflected."""
    fw = unfolded(walk) if isinstance(walk, Walk) else walk
    if not 0 <= j < len(fw.type_word):
        raise FoldError(f"step {j} out of range")
    if not fw.shown[j]:
        raise FoldError(f"step {j} is already a fold")
    shown = fw.shown[:j] + (0,) + fw.shown[j + 1:]
    return FoldedWalk(fw.datum, fw.type_word, shown, fw.base)


def folded_image(walk: Walk, mask: Mask) -> FoldedWalk:
    """Fold at every step hidden by the mask, in increasing order."""
    if len(mask) != len(walk):
        raise FoldError("mask length does not match the walk")
    fw = unfolded(walk)
    for j, b in enumerate(mask.bits):
        if not b:
            fw = fold_at(fw, j)
    assert fw.end == walk.base * subexpression(walk, mask)
    return fw


def is_positively_folded(fw: FoldedWalk, orientation: Orientation = Orientation.BASE) -> bool:
    if orientation is Orientation.TRIVIAL:
        return True
    return all(s.kind is not StepKind.NEGATIVE_FOLD for s in fw.steps)


def _require_reduced(datum: CartanDatum, word: Sequence[int]) -> None:
    if from_word(datum, word).length != len(word):
        raise FoldError(f"type word {list(word)} is not reduced")


def enumerate_positively_folded(
    datum: CartanDatum,
    word: Sequence[int],
    v: WeylElement,
    orientation: Orientation = Orientation.BASE,
) -> list[FoldedWalk]:
    """All positively folded walks of the given reduced type ending at v.

    Under the trivial orientation every fold is allowed, so the result is the
    set of folded images of all masks whose subexpression is v.
    """
    word = tuple(word)
    _require_reduced(datum, word)
    out: list[FoldedWalk] = []
    shown: list[int] = []
    m = len(word)

    def dfs(j: int, u: WeylElement) -> None:
        if j == m:
            if u == v:
                out.append(FoldedWalk(datum, word, tuple(shown), identity(datum)))
            return
        i = word[j]
        if orientation is Orientation.TRIVIAL or positive_side(u, i):
            shown.append(0)
            dfs(j + 1, u)
            shown.pop()
        shown.append(1)
        dfs(j + 1, u.times_simple(i))
        shown.pop()

    dfs(0, identity(datum))
    return out


def point_count(datum: CartanDatum, word: Sequence[int], v: WeylElement) -> Polynomial:
    """Sum of q^{positive crossings} (q-1)^{positive folds} over P(word, v)."""
    total = Polynomial(Q_NAMES)
    for fw in enumerate_positively_folded(datum, word, v):
        total = total + fw.count_term()
    return total


def r_polynomial(v: WeylElement, w: WeylElement) -> Polynomial:
    """The R-polynomial R_{v,w}(q) from the right-descent recursion."""
    if v.datum != w.datum:
        raise FoldError("v and w belong to different data")
    return _r(v, w)


@lru_cache(maxsize=None)
def _r(v: WeylElement, w: WeylElement) -> Polynomial:
    if v == w:
        return Polynomial.constant(Q_NAMES, 1)
    if v.length >= w.length or not bruhat_leq(v, w):
        return Polynomial(Q_NAMES)
    i = reduced_word(w)[-1]
    ws = w.times_simple(i)
    vs = v.times_simple(i)
    if vs.length < v.length:
        return _r(vs, ws)
    q = Polynomial.variable(Q_NAMES, 0)
    return (q - 1) * _r(v, ws) + q * _r(vs, ws)


@dataclass(frozen=True)
class MaskClass:
    mask: Mask
    image: FoldedWalk
    positive_base: bool
    positive_trivial: bool


def classify_masks(datum: CartanDatum, word: Sequence[int], v: WeylElement) -> list[MaskClass]:
    """For each mask with w^eps = v (any support), its folded image and positivity."""
    walk = walk_from_word(datum, word)
    out = []
    m = len(walk)
    for bits in itertools.product((0, 1), repeat=m):
        mask = Mask(bits)
        if subexpression(walk, mask) != v:
            continue
        fw = folded_image(walk, mask)
        out.append(MaskClass(mask, fw, is_positively_folded(fw), True))
    return out
