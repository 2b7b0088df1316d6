"""Sparse commutative polynomials in named generators over the coefficient ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .coeffs import ONE, ZERO, Coeff, CoeffPoly, coeff_times, join_terms, power_text
from .errors import ContextMismatchError

Exps = tuple[int, ...]


class CPoly:
    """Commutative polynomial: map from exponent vector to coefficient.

    ``gens`` fixes the variable order; exponent vectors always have
    ``len(gens)`` entries. Zero coefficients are never stored.
    """

    __slots__ = ("terms", "gens")

    def __init__(self, terms: dict[Exps, Coeff] | None = None, gens: Iterable[str] = ()):
        self.gens = tuple(gens)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, gens) -> "CPoly":
        return cls({}, gens)

    @classmethod
    def constant(cls, c: Coeff, gens) -> "CPoly":
        gens = tuple(gens)
        return cls({(0,) * len(gens): c}, gens)

    @classmethod
    def gen(cls, index: int, gens) -> "CPoly":
        gens = tuple(gens)
        e = [0] * len(gens)
        e[index] = 1
        return cls({tuple(e): ONE}, gens)

    @classmethod
    def monomial(cls, letters: Iterable[int], gens, coeff: Coeff = ONE) -> "CPoly":
        gens = tuple(gens)
        e = [0] * len(gens)
        for i in letters:
            e[i] += 1
        return cls({tuple(e): coeff}, gens)

    def _check(self, other: "CPoly"):
        if self.gens != other.gens:
            raise ContextMismatchError(f"generator sets differ: {self.gens} vs {other.gens}")

    def _coerce(self, other) -> "CPoly | None":
        if isinstance(other, CPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CoeffPoly)):
            return CPoly.constant(other, self.gens)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return CPoly(out, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return CPoly({e: -c for e, c in self.terms.items()}, self.gens)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CPoly):
            self._check(other)
            out: dict[Exps, Coeff] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, ZERO) + c1 * c2
            return CPoly(out, self.gens)
        if isinstance(other, (int, Fraction, CoeffPoly)):
            return CPoly({e: c * other for e, c in self.terms.items()}, self.gens)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = CPoly.constant(ONE, self.gens)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == CPoly.constant(Fraction(other), self.gens)
        return NotImplemented

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree in the generators (central parameters do not count); -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def diff(self, index: int, times: int = 1) -> "CPoly":
        out = self
        for _ in range(times):
            terms = {}
            for e, c in out.terms.items():
                k = e[index]
                if k:
                    ne = list(e)
                    ne[index] = k - 1
                    terms[tuple(ne)] = c * k
            out = CPoly(terms, self.gens)
        return out

    def embed(self, gens) -> "CPoly":
        """Inclusion into a wider generator set whose prefix is ``self.gens``."""
        gens = tuple(gens)
        if gens[: len(self.gens)] != self.gens:
            raise ContextMismatchError(f"{self.gens} is not a prefix of {gens}")
        pad = (0,) * (len(gens) - len(self.gens))
        return CPoly({e + pad: c for e, c in self.terms.items()}, gens)

    def sorted_terms(self) -> list[tuple[Exps, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self):
        return join_terms([coeff_times(c, power_text(self.gens, e)) for e, c in self.sorted_terms()])

    def __repr__(self):
        return f"CPoly({self})"
