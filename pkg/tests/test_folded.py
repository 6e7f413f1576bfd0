from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from alcoves.cartan import datum_from_type
from alcoves.folded import (
    FoldError,
    FoldedWalk,
    LabelKind,
    Orientation,
    StepKind,
    classify_masks,
    enumerate_positively_folded,
    fold_at,
    folded_image,
    is_positively_folded,
    point_count,
    positive_side,
    r_polynomial,
    unfolded,
)
from alcoves.polynomial import Q_NAMES, Polynomial, parse_polynomial
from alcoves.roots import AffineRoot
from alcoves.walks import Mask, subexpression, walk_from_word
from alcoves.weyl import bruhat_leq, elements_up_to_length, from_word, identity, reduced_word

A2 = datum_from_type("A2~")
C2 = datum_from_type("C2~")
GAMMA = [1, 2, 1, 0]
E = identity(A2)
NEG, POS = StepKind.NEGATIVE_CROSSING, StepKind.POSITIVE_FOLD


def Q(text):
    return parse_polynomial(text, Q_NAMES)


def kinds(fw):
    return [s.kind for s in fw.steps]


def test_positive_side_examples():
    assert all(positive_side(E, i) for i in range(3))
    s1 = from_word(A2, [1])
    assert not positive_side(s1, 1)
    assert positive_side(s1, 0)


def test_fold_at():
    fw = fold_at(walk_from_word(A2, [1]), 0)
    assert fw.end == E
    assert kinds(fw) == [StepKind.POSITIVE_FOLD]
    assert fw.steps[0].hyperplane == AffineRoot((1, 0), 0)
    second = fold_at(walk_from_word(A2, GAMMA), 1)
    assert second.folds == [1]
    assert second.end == from_word(A2, [1, 1, 0])
    with pytest.raises(FoldError):
        fold_at(second, 1)
    with pytest.raises(FoldError):
        fold_at(second, 4)


def test_folded_images_of_the_worked_example():
    walk = walk_from_word(A2, GAMMA)
    six = folded_image(walk, Mask((0, 0, 1, 1)))
    assert six.folds == [0, 1]
    assert [six.steps[j].hyperplane for j in six.folds] == [AffineRoot((1, 0), 0), AffineRoot((0, 1), 0)]
    assert is_positively_folded(six)
    seven = folded_image(walk, Mask((1, 0, 0, 1)))
    assert seven.folds == [1, 2]
    assert kinds(seven)[2] is StepKind.NEGATIVE_FOLD
    assert seven.steps[2].hyperplane == AffineRoot((1, 0), 0)
    assert not is_positively_folded(seven)
    assert is_positively_folded(seven, Orientation.TRIVIAL)
    whole = folded_image(walk, Mask((1, 1, 1, 1)))
    assert whole.folds == [] and whole == unfolded(walk)
    assert is_positively_folded(whole)
    with pytest.raises(FoldError):
        folded_image(walk, Mask((1, 0)))


def test_enumeration_examples():
    (one,) = enumerate_positively_folded(A2, [1], from_word(A2, [1]))
    assert kinds(one) == [NEG]
    assert one.steps[0].label_kind is LabelKind.ZERO
    (fold,) = enumerate_positively_folded(A2, [1], E)
    assert kinds(fold) == [POS]
    assert fold.steps[0].label_kind is LabelKind.NONZERO
    expected = {
        (1, 0): [NEG, NEG],
        (1,): [NEG, POS],
        (0,): [POS, NEG],
        (): [POS, POS],
    }
    for word, pattern in expected.items():
        walks = enumerate_positively_folded(A2, [1, 0], from_word(A2, word))
        assert [kinds(fw) for fw in walks] == [pattern]


def test_enumeration_requires_reduced_words():
    with pytest.raises(FoldError):
        enumerate_positively_folded(A2, [1, 1], E)


def test_count_examples():
    assert point_count(A2, [1], from_word(A2, [1])) == Q("1")
    assert point_count(A2, [1], E) == Q("q-1")
    assert point_count(A2, [1, 0], E) == Q("(q-1)^2")
    assert r_polynomial(E, from_word(A2, [1, 0])) == Q("q^2-2*q+1")
    # the longest element of the finite subgroup
    assert r_polynomial(E, from_word(A2, [1, 2, 1])) == Q("(q-1)^3+q*(q-1)")
    assert r_polynomial(from_word(A2, [2]), from_word(A2, [1])) == 0
    with pytest.raises(FoldError):
        r_polynomial(E, identity(C2))


def test_count_term_rejects_negative_folds():
    seven = folded_image(walk_from_word(A2, GAMMA), Mask((1, 0, 0, 1)))
    with pytest.raises(FoldError):
        seven.count_term()


def _pairs(datum, bound):
    elements = elements_up_to_length(datum, bound)
    return [(v, w) for w in elements for v in elements if bruhat_leq(v, w)]


@pytest.mark.parametrize("datum, bound", [(A2, 5), (C2, 4)], ids=["A2~", "C2~"])
def test_counts_satisfy_r_polynomial_symmetry(datum, bound):
    # q^{l(w)-l(v)} R(1/q) = (-1)^{l(w)-l(v)} R(q)
    for v, w in _pairs(datum, bound):
        n = w.length - v.length
        count = point_count(datum, reduced_word(w), v)
        flipped = Polynomial(Q_NAMES, {(n - k,): c for (k,), c in count.items()})
        assert flipped == count.scale((-1) ** n)
        if n == 1:
            assert count == Q("q-1")


@pytest.mark.parametrize("datum, bound", [(A2, 4), (C2, 4)], ids=["A2~", "C2~"])
def test_counts_satisfy_inversion_formula(datum, bound):
    # sum over x <= z <= y of (-1)^{l(z)-l(x)} R_{x,z} R_{z,y} = [x = y]
    elements = elements_up_to_length(datum, bound)
    zero = Polynomial(Q_NAMES)
    for y in elements:
        below = [z for z in elements if bruhat_leq(z, y)]
        for x in below:
            total = zero
            for z in below:
                if bruhat_leq(x, z):
                    rxz = point_count(datum, reduced_word(z), x)
                    rzy = point_count(datum, reduced_word(y), z)
                    total = total + (rxz * rzy).scale((-1) ** (z.length - x.length))
            assert total == (Q("1") if x == y else zero)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([A2, C2]), st.lists(st.integers(0, 2), max_size=6))
def test_classification_matches_enumeration(datum, word):
    w = from_word(datum, word)
    rw = reduced_word(w)
    walk = walk_from_word(datum, rw)
    for v in {subexpression(walk, Mask(b)) for b in itertools.product((0, 1), repeat=len(rw))}:
        rows = classify_masks(datum, rw, v)
        positive = [tuple(r.mask.bits) for r in rows if r.positive_base]
        assert positive == [fw.shown for fw in enumerate_positively_folded(datum, rw, v)]
        trivial = [fw.shown for fw in enumerate_positively_folded(datum, rw, v, Orientation.TRIVIAL)]
        assert sorted(trivial) == sorted(tuple(r.mask.bits) for r in rows)
        assert all(r.image.end == v for r in rows)


def test_folded_walk_json():
    fw = folded_image(walk_from_word(A2, GAMMA), Mask((1, 0, 0, 1)))
    obj = fw.to_json()
    assert obj["mask"] == "1001"
    assert obj["end"] == [1, 0]
    assert [s["kind"] for s in obj["steps"]] == [
        "negative-crossing",
        "positive-fold",
        "negative-fold",
        "negative-crossing",
    ]
    with pytest.raises(FoldError):
        FoldedWalk(A2, (1, 2), (1,), E)
