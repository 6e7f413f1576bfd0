"""
Embedded sweeps run by ``alcoves selftest``.

Each check prints one line, ``PASS name`` or ``FAIL name: detail``.  Output
carries no timings, so repeated runs are byte-identical.
"""
from __future__ import annotations

import itertools
from typing import Callable, TextIO

from .cartan import datum_from_type
from .folded import Orientation, folded_image, is_positively_folded, point_count, positive_side, r_polynomial
from .geometry import geometric_positive_side
from .localization import (
    format_factored,
    gkm_sweep,
    localization_class,
    localize,
    localize_recursive,
    schubert_point,
)
from .polynomial import parse_polynomial
from .walks import Mask, enumerate_masks, random_equivalent_word, subexpression, walk_from_word
from .weyl import bruhat_leq, elements_up_to_length, from_word, reduced_word

A2 = datum_from_type("A2~")
C2 = datum_from_type("C2~")


def _pairs(datum, bound):
    elements = elements_up_to_length(datum, bound)
    for w in elements:
        for v in elements:
            if v.length <= w.length and bruhat_leq(v, w):
                yield v, w


def check_worked_example() -> str | None:
    w = from_word(A2, [1, 2, 1, 0])
    v = from_word(A2, [1, 0])
    walk = walk_from_word(A2, [1, 2, 1, 0])
    masks = [str(m) for m in enumerate_masks(walk, v)]
    if masks != ["0011", "1001"]:
        return f"masks {masks}"
    if format_factored(localize(v, w), w) != "(a1+a2)*(a1+a2+d)":
        return "psi value"
    braid = walk_from_word(A2, [2, 1, 2, 0])
    if [str(m) for m in enumerate_masks(braid, v)] != ["0101"]:
        return "braid masks"
    if localize(v, w, [2, 1, 2, 0]) != localize(v, w):
        return "braid psi"
    return None


def check_class_values() -> str | None:
    names = localization_class(from_word(A2, [1]), 4).values()[0].names
    got = {p for p in localization_class(from_word(A2, [1, 0]), 4).values()}
    for text in ("(a1+a2)*(a1+a2+d)", "(a1+a2)*(a2+d)", "a1*(a1+d)", "a1*(-a2+d)", "(-a1+2d)*(-a1-a2+2d)", "0"):
        if parse_polynomial(text, names) not in got:
            return f"missing {text}"
    return None


def check_walk_independence() -> str | None:
    for v, w in _pairs(A2, 3):
        base = localize(v, w)
        for seed in range(3):
            word = random_equivalent_word(w, 1 + seed % 2, seed)
            if localize(v, w, word) != base:
                return f"v={reduced_word(v)} w={reduced_word(w)} seed={seed}"
    return None


def check_oracle() -> str | None:
    for datum, bound in ((A2, 4), (C2, 3)):
        for v, w in _pairs(datum, bound):
            p = localize(v, w)
            if p != localize_recursive(v, w):
                return f"{datum.label()} v={reduced_word(v)} w={reduced_word(w)}"
            if not p.is_homogeneous(v.length):
                return "homogeneity"
            if v == w and p != schubert_point(v):
                return "point value"
    return None


def check_gkm() -> str | None:
    for v, w, beta, ok in gkm_sweep(A2, 3, 1):
        if not ok:
            return f"v={reduced_word(v)} w={reduced_word(w)} beta={beta}"
    return None


def check_counts() -> str | None:
    for datum, bound in ((A2, 4), (C2, 3)):
        for v, w in _pairs(datum, bound):
            if point_count(datum, reduced_word(w), v) != r_polynomial(v, w):
                return f"{datum.label()} v={reduced_word(v)} w={reduced_word(w)}"
    return None


def check_folded_images() -> str | None:
    walk = walk_from_word(A2, [1, 2, 1, 0])
    one = folded_image(walk, Mask((0, 0, 1, 1)))
    two = folded_image(walk, Mask((1, 0, 0, 1)))
    if one.folds != [0, 1] or not is_positively_folded(one):
        return "mask 0011"
    if two.folds != [1, 2] or is_positively_folded(two):
        return "mask 1001"
    if not is_positively_folded(two, Orientation.TRIVIAL):
        return "trivial orientation"
    return None


def check_brute_force() -> str | None:
    for word in itertools.product(range(3), repeat=4):
        walk = walk_from_word(A2, word)
        by_element: dict = {}
        for bits in itertools.product((0, 1), repeat=4):
            mask = Mask(bits)
            x = subexpression(walk, mask)
            if mask.support == x.length:
                by_element.setdefault(x, []).append(mask)
        for x, masks in by_element.items():
            if enumerate_masks(walk, x) != masks:
                return f"masks for {word}"
    for datum in (A2, C2):
        for u in elements_up_to_length(datum, 3):
            for i in range(3):
                if positive_side(u, i) != geometric_positive_side(u, i):
                    return f"orientation {datum.label()} {reduced_word(u)} {i}"
    return None


CHECKS: list[tuple[str, Callable[[], str | None]]] = [
    ("worked-example", check_worked_example),
    ("class-values", check_class_values),
    ("walk-independence", check_walk_independence),
    ("oracle-equivalence", check_oracle),
    ("gkm", check_gkm),
    ("point-counts", check_counts),
    ("folded-images", check_folded_images),
    ("brute-force", check_brute_force),
]


def run(out: TextIO) -> bool:
    ok = True
    for name, check in CHECKS:
        problem = check()
        if problem is None:
            out.write(f"PASS {name}\n")
        else:
            ok = False
            out.write(f"FAIL {name}: {problem}\n")
    return ok
