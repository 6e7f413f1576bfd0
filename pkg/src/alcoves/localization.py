"""
Localizations psi^v(w) of equivariant affine Schubert classes.

Values are polynomials in the variables ``a1, ..., a<n-1>, d`` (simple finite
roots and the null root).  :func:`localize` sums root products over masks of
any walk to w; :func:`localize_recursive` is an independent oracle built only
from psi^v(e) = [v = e] and the right-multiplication recursion.

>>> from alcoves.cartan import datum_from_type
>>> from alcoves.weyl import from_word
>>> A2 = datum_from_type("A2~")
>>> p = localize(from_word(A2, [1, 0]), from_word(A2, [1, 2, 1, 0]))
>>> format_factored(p, from_word(A2, [1, 2, 1, 0]))
'(a1+a2)*(a1+a2+d)'
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .cartan import AlcoveError, CartanDatum
from .polynomial import (
    Polynomial,
    alpha0_variable_names,
    format_expanded,
    root_variable_names,
)
from .roots import AffineRoot, affine_roots, is_positive, simple_root
from .walks import enumerate_masks, mask_product, root_to_polynomial, walk_from_word
from .weyl import (
    WeylElement,
    bruhat_leq,
    elements_up_to_length,
    from_word,
    reduced_word,
    reflection,
)


class LocalizationError(AlcoveError):
    pass


def _one(datum: CartanDatum) -> Polynomial:
    return Polynomial.constant(root_variable_names(datum.rank), 1)


def _zero(datum: CartanDatum) -> Polynomial:
    return Polynomial(root_variable_names(datum.rank))


def localize(v: WeylElement, w: WeylElement, word: Sequence[int] | None = None,
             bruhat_pruning: bool = False) -> Polynomial:
    """psi^v(w) as a sum of root products over the masks of a walk to w."""
    datum = w.datum
    if v.datum != datum:
        raise LocalizationError("v and w belong to different data")
    if word is None:
        word = reduced_word(w)
    elif from_word(datum, word) != w:
        raise LocalizationError(f"word {list(word)} does not multiply to w")
    walk = walk_from_word(datum, word)
    total = _zero(datum)
    for mask in enumerate_masks(walk, v, bruhat_pruning=bruhat_pruning):
        total = total + mask_product(walk, mask)
    if not total.is_integral():
        raise LocalizationError("non-integral localization value")
    return total


def localize_recursive(v: WeylElement, w: WeylElement) -> Polynomial:
    """psi^v(w) from the recursion psi^v(xs) = psi^v(x) + [vs < v] (x alpha_s) psi^{vs}(x)."""
    if v.datum != w.datum:
        raise LocalizationError("v and w belong to different data")
    return _recursive(v, w)


@lru_cache(maxsize=None)
def _recursive(v: WeylElement, w: WeylElement) -> Polynomial:
    datum = w.datum
    if w.is_identity:
        return _one(datum) if v.is_identity else _zero(datum)
    i = reduced_word(w)[-1]
    x = w.times_simple(i)
    value = _recursive(v, x)
    vs = v.times_simple(i)
    if vs.length < v.length:
        root = x.apply(simple_root(datum, i))
        value = value + root_to_polynomial(datum, root) * _recursive(vs, x)
    return value


def schubert_point(v: WeylElement) -> Polynomial:
    """Product of the inversions of v, the value psi^v(v)."""
    p = _one(v.datum)
    for beta in v.inversions():
        p = p * root_to_polynomial(v.datum, beta)
    return p


# bases and specializations


def to_alpha0_basis(p: Polynomial, datum: CartanDatum) -> Polynomial:
    """Substitute d = a0 + theta, giving a polynomial in a0, ..., a<n-1>."""
    r = datum.rank
    names = alpha0_variable_names(r)
    if p.names != root_variable_names(r):
        raise LocalizationError("expected a polynomial in the delta basis")
    images = [Polynomial.variable(names, k + 1) for k in range(r)]
    images.append(Polynomial.linear(names, [1] + list(datum.highest_root)))
    return p.rename(names, images)


def from_alpha0_basis(p: Polynomial, datum: CartanDatum) -> Polynomial:
    """Substitute a0 = d - theta, the inverse of :func:`to_alpha0_basis`."""
    r = datum.rank
    names = root_variable_names(r)
    if p.names != alpha0_variable_names(r):
        raise LocalizationError("expected a polynomial in the alpha_0 basis")
    a0 = Polynomial.linear(names, [-c for c in datum.highest_root] + [1])
    images = [a0] + [Polynomial.variable(names, k) for k in range(r)]
    return p.rename(names, images)


def specialize_delta_zero(p: Polynomial) -> Polynomial:
    if not p.names or p.names[-1] != "d":
        raise LocalizationError("expected a polynomial in the delta basis")
    return p.substitute(len(p.names) - 1, p.zero())


# divisibility and GKM


def divides_linear(ell: AffineRoot | Polynomial, p: Polynomial) -> bool:
    """Whether a nonzero linear form divides p, by restriction to its zero set."""
    if isinstance(ell, AffineRoot):
        ell = Polynomial.linear(p.names, list(ell.finite) + [ell.level])
    coeffs, const = ell.linear_coefficients()
    if const or not any(coeffs):
        raise LocalizationError("divisor must be a nonzero homogeneous linear form")
    x = max(k for k, c in enumerate(coeffs) if c)
    # on ell = 0 the variable x equals -(sum of the other terms) / c_x
    solved = Polynomial.linear(
        p.names, [Fraction(0) if k == x else -c / coeffs[x] for k, c in enumerate(coeffs)]
    )
    return p.substitute(x, solved).is_zero()


def gkm_check(v: WeylElement, w: WeylElement, beta: AffineRoot) -> bool:
    """beta divides psi^v(w) - psi^v(s_beta w)."""
    diff = localize(v, w) - localize(v, reflection(w.datum, beta) * w)
    return divides_linear(beta, diff)


def gkm_sweep(datum: CartanDatum, bound: int, max_level: int) -> Iterator[tuple[WeylElement, WeylElement, AffineRoot, bool]]:
    """Yield (v, w, beta, ok) for all v <= w with l(w) <= bound and positive beta of level <= max_level."""
    elements = elements_up_to_length(datum, bound)
    betas = [b for b in affine_roots(datum, max_level) if is_positive(b)]
    cache: dict[tuple[WeylElement, WeylElement], Polynomial] = {}

    def psi(v: WeylElement, x: WeylElement) -> Polynomial:
        key = (v, x)
        if key not in cache:
            cache[key] = localize(v, x) if bruhat_leq(v, x) else _zero(datum)
        return cache[key]

    for w in elements:
        for v in elements:
            if v.length > w.length or not bruhat_leq(v, w):
                continue
            for beta in betas:
                diff = psi(v, w) - psi(v, reflection(datum, beta) * w)
                yield v, w, beta, divides_linear(beta, diff)


# classes


@dataclass(frozen=True)
class LocalizationClass:
    v: WeylElement
    bound: int
    entries: tuple[tuple[WeylElement, Polynomial], ...]

    def __getitem__(self, w: WeylElement) -> Polynomial:
        for x, p in self.entries:
            if x == w:
                return p
        raise KeyError(w)

    def values(self) -> list[Polynomial]:
        return [p for _, p in self.entries]

    def to_json(self) -> list[dict]:
        return [
            {"w": list(reduced_word(w)), "psi": format_factored(p, w)}
            for w, p in self.entries
        ]


def localization_class(v: WeylElement, bound: int) -> LocalizationClass:
    """psi^v(w) for all w with l(w) <= bound, ordered by length then reduced word."""
    if bound < 0:
        raise LocalizationError("length bound must be nonnegative")
    datum = v.datum
    entries = []
    for w in elements_up_to_length(datum, bound):
        p = localize(v, w) if bruhat_leq(v, w) else _zero(datum)
        entries.append((w, p))
    return LocalizationClass(v, bound, tuple(entries))


# printing


def _factor_text(f: Polynomial) -> str:
    text = format_expanded(f)
    return f"({text})" if len(f.terms) > 1 else text


def format_factored(p: Polynomial, w: WeylElement | None = None,
                    candidates: Sequence[AffineRoot] = ()) -> str:
    """Print p as a product of linear root factors when it splits that way.

    Trial divisors are ``candidates``, then the inversions of w, then positive
    roots of small level (when a datum is known).  Falls back to the expanded form.
    """
    if p.is_zero() or p.degree <= 0 or not p.is_homogeneous():
        return format_expanded(p)
    names = p.names
    rank = len(names) - 1
    trial: list[AffineRoot] = list(candidates)
    if w is not None:
        trial.extend(w.inversions())
        max_level = p.degree_in(rank) + 1
        trial.extend(b for b in affine_roots(w.datum, max_level) if is_positive(b))
    trial.extend(
        AffineRoot(tuple(int(k == j) for k in range(rank)), int(j == rank))
        for j in range(rank + 1)
    )
    factors: list[Polynomial] = []
    rest = p
    progress = True
    while rest.degree > 0 and progress:
        progress = False
        for beta in trial:
            lin = Polynomial.linear(names, list(beta.finite) + [beta.level])
            q = rest.divide_linear(lin)
            if q is not None:
                factors.append(lin)
                rest = q
                progress = True
                break
    if rest.degree != 0:
        return format_expanded(p)
    c = rest.constant_term()
    if c == -1 and factors:
        factors[0] = -factors[0]
        c = Fraction(1)
    if len(factors) == 1:
        return format_expanded(p)
    grouped: dict[Polynomial, int] = {}
    for f in factors:
        grouped[f] = grouped.get(f, 0) + 1
    body = "*".join(
        _factor_text(f) if k == 1 else f"({format_expanded(f)})^{k}" for f, k in grouped.items()
    )
    if c == 1:
        return body
    return f"{format_expanded(rest)}*{body}"
