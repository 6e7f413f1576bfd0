"""
Exact multivariate polynomials with rational coefficients.

A :class:`Polynomial` carries its variable names; localization values use
``("a1", ..., "a<n-1>", "d")`` (the delta basis) or ``("a0", ..., "a<n-1>")``
(the alpha_0 basis), and point counts use ``("q",)``.  Terms are printed in
graded lexicographic order with the last variable smallest.

>>> a1, a2, d = root_variables(2)
>>> str((a1 + a2) * (a1 + a2 + d))
'a1^2+2*a1*a2+a1*d+a2^2+a2*d'
>>> parse_polynomial("(a1+a2)*(a1+a2+d)", a1.names) == (a1 + a2) * (a1 + a2 + d)
True
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cartan import AlcoveError

Exps = tuple[int, ...]


class PolynomialError(AlcoveError):
    pass


class Polynomial:
    __slots__ = ("names", "_terms", "_hash")

    def __init__(self, names: Sequence[str], terms: Mapping[Exps, Fraction | int] | None = None):
        self.names = tuple(names)
        clean: dict[Exps, Fraction] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(self.names):
                raise PolynomialError("exponent vector does not match the variables")
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = clean.get(tuple(exps), Fraction(0)) + c
                if not clean[tuple(exps)]:
                    del clean[tuple(exps)]
        self._terms = clean
        self._hash = None

    # construction

    @classmethod
    def constant(cls, names: Sequence[str], c: Fraction | int) -> Polynomial:
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def variable(cls, names: Sequence[str], index: int) -> Polynomial:
        return cls(names, {tuple(int(k == index) for k in range(len(names))): 1})

    @classmethod
    def linear(cls, names: Sequence[str], coeffs: Sequence[Fraction | int], const: Fraction | int = 0) -> Polynomial:
        n = len(names)
        terms: dict[Exps, Fraction | int] = {(0,) * n: const}
        for k, c in enumerate(coeffs):
            terms[tuple(int(j == k) for j in range(n))] = c
        return cls(names, terms)

    def zero(self) -> Polynomial:
        return Polynomial(self.names)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.names, 1)

    # inspection

    @property
    def terms(self) -> dict[Exps, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if len(degs) > 1:
            return False
        return degree is None or not degs or degs == {degree}

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=0)

    def coefficient(self, exps: Exps) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * len(self.names))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.names != self.names:
                raise PolynomialError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.names, other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(self.names, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.names, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.names, terms)

    __rmul__ = __mul__

    def scale(self, c: Fraction | int) -> Polynomial:
        return Polynomial(self.names, {e: c * x for e, x in self._terms.items()})

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise PolynomialError("negative power")
        out = self.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(self.names, other)._terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.names == other.names and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self._terms.items())))
        return self._hash

    # substitution and evaluation

    def substitute(self, index: int, value: Polynomial) -> Polynomial:
        """Replace variable ``index`` by ``value`` (same variable names)."""
        value = self._coerce(value)
        powers = {0: self.one()}
        out = self.zero()
        for e, c in self._terms.items():
            k = e[index]
            if k not in powers:
                powers[k] = value ** k
            rest = Polynomial(self.names, {e[:index] + (0,) + e[index + 1:]: c})
            out = out + rest * powers[k]
        return out

    def rename(self, names: Sequence[str], mapping: Sequence[Polynomial]) -> Polynomial:
        """Evaluate at polynomials in another variable set; ``mapping[k]`` replaces variable k."""
        out = Polynomial(names)
        one = Polynomial.constant(names, 1)
        for e, c in self._terms.items():
            term = one.scale(c)
            for k, p in enumerate(e):
                if p:
                    term = term * mapping[k] ** p
            out = out + term
        return out

    def evaluate(self, values: Sequence[Fraction | int] | Mapping[str, Fraction | int]) -> Fraction:
        if isinstance(values, Mapping):
            values = [values[n] for n in self.names]
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for v, p in zip(values, e):
                if p:
                    t *= Fraction(v) ** p
            total += t
        return total

    # linear forms

    def linear_coefficients(self) -> tuple[list[Fraction], Fraction]:
        if self.degree > 1:
            raise PolynomialError("not a linear form")
        n = len(self.names)
        coeffs = [self.coefficient(tuple(int(j == k) for j in range(n))) for k in range(n)]
        return coeffs, self.constant_term()

    def divide_linear(self, ell: Polynomial) -> Polynomial | None:
        """Exact quotient by a homogeneous linear form, or None if it does not divide."""
        coeffs, const = ell.linear_coefficients()
        if const or not any(coeffs):
            raise PolynomialError("divisor must be a nonzero homogeneous linear form")
        x = max(k for k, c in enumerate(coeffs) if c)
        c = coeffs[x]
        rest = ell - Polynomial.variable(self.names, x).scale(c)
        # write self = sum_k p_k x^k with p_k free of x; solve ell * q = self top-down
        parts: dict[int, dict[Exps, Fraction]] = {}
        for e, coef in self._terms.items():
            parts.setdefault(e[x], {})[e[:x] + (0,) + e[x + 1:]] = coef
        if not parts:
            return self.zero()
        top = max(parts)
        p = {k: Polynomial(self.names, parts.get(k, {})) for k in range(top + 1)}
        q: dict[int, Polynomial] = {}
        carry = self.zero()
        for k in range(top, 0, -1):
            q[k - 1] = (p[k] - carry).scale(Fraction(1) / c)
            carry = rest * q[k - 1]
        if p[0] != carry:
            return None
        xv = Polynomial.variable(self.names, x)
        out = self.zero()
        for k, qk in q.items():
            out = out + qk * xv ** k
        return out

    # text

    def __str__(self) -> str:
        return format_expanded(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def format_expanded(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for exps, c in p.sorted_terms():
        mono = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(p.names, exps) if k
        )
        mag = abs(c)
        if not mono:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_rational(mag)}*{mono}"
        out.append(("-" if c < 0 else "+", body))
    first_sign, first = out[0]
    return ("-" if first_sign == "-" else "") + first + "".join(s + b for s, b in out[1:])


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def root_variable_names(rank: int) -> tuple[str, ...]:
    return tuple(f"a{i}" for i in range(1, rank + 1)) + ("d",)


def alpha0_variable_names(rank: int) -> tuple[str, ...]:
    return tuple(f"a{i}" for i in range(rank + 1))


def root_variables(rank: int) -> tuple[Polynomial, ...]:
    names = root_variable_names(rank)
    return tuple(Polynomial.variable(names, k) for k in range(len(names)))


Q_NAMES = ("q",)


def q_polynomial(coeffs: Sequence[int]) -> Polynomial:
    """Univariate count polynomial from low-to-high coefficients."""
    return Polynomial(Q_NAMES, {(k,): c for k, c in enumerate(coeffs)})


# parsing: expr := term (('+'|'-') term)*, term := factor ('*'? factor)*,
# factor := atom ('^' int)?, atom := number ('/' number)? | name | '(' expr ')'

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = tuple(names)
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise PolynomialError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return tok

    def expect(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise PolynomialError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolynomialError("empty polynomial text")
        p = self.expr()
        if self.peek() is not None:
            raise PolynomialError(f"trailing input in {self.text!r}")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                p = p * self.factor()
            elif tok is not None and (tok[0] in ("num", "name") or tok == ("op", "(")):
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        p = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise PolynomialError(f"exponent must be an integer in {self.text!r}")
            p = p ** int(val)
        return p

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            c = Fraction(int(val))
            if self.peek() == ("op", "/"):
                self.take()
                k2, v2 = self.take()
                if k2 != "num":
                    raise PolynomialError(f"bad rational in {self.text!r}")
                c /= int(v2)
            return Polynomial.constant(self.names, c)
        if kind == "name":
            if val in self.names:
                return Polynomial.variable(self.names, self.names.index(val))
            raise PolynomialError(f"unknown variable {val!r}; expected one of {self.names}")
        if val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if val == "-":
            return -self.factor()
        raise PolynomialError(f"unexpected {val!r} in {self.text!r}")


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    return _Parser(text, names).parse()


def to_json(p: Polynomial) -> list[dict]:
    return [{"exps": list(e), "coef": _fmt_rational(c)} for e, c in p.sorted_terms()]


def from_json(obj: Iterable[Mapping], names: Sequence[str]) -> Polynomial:
    return Polynomial(names, {tuple(t["exps"]): Fraction(str(t["coef"])) for t in obj})
