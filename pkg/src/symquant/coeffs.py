"""Coefficient ring: exact rationals, optionally polynomial in central parameters.

A coefficient is either a :class:`fractions.Fraction` or a :class:`CoeffPoly`.
``CoeffPoly`` values are normalized so that a constant polynomial is always
returned as a plain ``Fraction``; the two kinds therefore never compare equal
by accident and ``bool(c)`` is a valid zero test for both.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import ContextMismatchError, ParseError

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = text.strip()
    try:
        num, _, den = s.partition("/")
        if "." in s or "e" in s.lower():
            raise ValueError
        return Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational literal: {text!r}", s, 0) from None


def format_scalar(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class CoeffPoly:
    """Commutative polynomial in central parameters with rational coefficients."""

    __slots__ = ("terms", "params", "_hash")

    def __init__(self, terms: dict[tuple[int, ...], Fraction], params: tuple[str, ...]):
        self.terms = terms
        self.params = params
        self._hash = None

    @staticmethod
    def make(terms: dict[tuple[int, ...], Fraction], params: tuple[str, ...]) -> "Coeff":
        terms = {e: Fraction(c) for e, c in terms.items() if c}
        if not terms:
            return ZERO
        zero = (0,) * len(params)
        if len(terms) == 1 and zero in terms:
            return terms[zero]
        return CoeffPoly(terms, params)

    @staticmethod
    def param(index: int, params: tuple[str, ...]) -> "CoeffPoly":
        e = [0] * len(params)
        e[index] = 1
        return CoeffPoly({tuple(e): ONE}, params)

    def _lift(self, other) -> dict[tuple[int, ...], Fraction]:
        if isinstance(other, CoeffPoly):
            if other.params != self.params:
                raise ContextMismatchError(f"parameter sets differ: {self.params} vs {other.params}")
            return other.terms
        if isinstance(other, (int, Fraction)):
            return {(0,) * len(self.params): Fraction(other)} if other else {}
        raise TypeError

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.items():
            out[e] = out.get(e, ZERO) + c
        return CoeffPoly.make(out, self.params)

    __radd__ = __add__

    def __neg__(self):
        return CoeffPoly({e: -c for e, c in self.terms.items()}, self.params)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return CoeffPoly.make(out, self.params)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, CoeffPoly):
            return self.params == other.params and self.terms == other.terms
        return False

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.params, frozenset(self.terms.items())))
        return self._hash

    def degree(self) -> int:
        return max(sum(e) for e in self.terms)

    def __str__(self):
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            parts.append(_monomial_text(self.terms[e], e, self.params))
        return join_terms(parts)

    def __repr__(self):
        return f"CoeffPoly({self})"


Coeff = Union[Fraction, CoeffPoly]


def is_constant(c: Coeff) -> bool:
    return not isinstance(c, CoeffPoly)


def power_text(names, exps) -> str:
    out = []
    for name, k in zip(names, exps):
        if k == 1:
            out.append(name)
        elif k > 1:
            out.append(f"{name}^{k}")
    return "*".join(out)


def _monomial_text(c: Fraction, exps, names) -> str:
    body = power_text(names, exps)
    return coeff_times(c, body)


def coeff_times(c: Coeff, body: str) -> str:
    """Render ``c*body`` as a signed term (leading '-' for negative scalars)."""
    if isinstance(c, CoeffPoly):
        text = f"({c})"
        return f"{text}*{body}" if body else text
    if not body:
        return format_scalar(c)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{format_scalar(c)}*{body}"


def join_terms(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
