"""Exact arithmetic in the free associative algebra on named generators.

Words are tuples of generator indices; the empty word is the identity.
An :class:`NCPoly` is a sparse map from words to coefficients with zeros
removed after every operation, so term-map equality is free-algebra equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence

from .coeffs import ONE, ZERO, Coeff, CoeffPoly, coeff_times, join_terms
from .cpoly import CPoly
from .errors import CapExceededError, ContextMismatchError

Word = tuple[int, ...]

DEGREE_CAP = 12
SYM_CAP = 8


def _word_text(word: Word, gens: Sequence[str]) -> str:
    # runs of a repeated letter print as powers
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = gens[word[i]]
        out.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(out)


def word_key(word: Word) -> tuple[int, Word]:
    return (len(word), word)


class NCPoly:
    __slots__ = ("terms", "gens")

    def __init__(self, terms: dict[Word, Coeff] | None = None, gens: Iterable[str] = ()):
        self.gens = tuple(gens)
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, gens) -> "NCPoly":
        return cls({}, gens)

    @classmethod
    def one(cls, gens) -> "NCPoly":
        return cls({(): ONE}, gens)

    @classmethod
    def constant(cls, c: Coeff, gens) -> "NCPoly":
        return cls({(): c}, gens)

    @classmethod
    def gen(cls, index: int, gens) -> "NCPoly":
        return cls({(index,): ONE}, gens)

    @classmethod
    def word(cls, letters: Iterable[int], gens, coeff: Coeff = ONE) -> "NCPoly":
        return cls({tuple(letters): coeff}, gens)

    @classmethod
    def generators(cls, gens) -> list["NCPoly"]:
        gens = tuple(gens)
        return [cls.gen(i, gens) for i in range(len(gens))]

    def _check(self, other: "NCPoly"):
        if self.gens is not other.gens and self.gens != other.gens:
            raise ContextMismatchError(f"generator sets differ: {self.gens} vs {other.gens}")

    def _coerce(self, other) -> "NCPoly | None":
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CoeffPoly)):
            return NCPoly.constant(other, self.gens)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NCPoly(_add_terms(self.terms, o.terms), self.gens)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, self.gens)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NCPoly(_add_terms(self.terms, o.terms, -1), self.gens)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return mul(self, other)
        if isinstance(other, (int, Fraction, CoeffPoly)):
            return NCPoly({w: c * other for w, c in self.terms.items()}, self.gens)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CoeffPoly)):
            return NCPoly({w: other * c for w, c in self.terms.items()}, self.gens)
        return NotImplemented

    def __pow__(self, k: int):
        out = NCPoly.one(self.gens)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == NCPoly.constant(Fraction(other), self.gens)
        return NotImplemented

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def coeff(self, word: Word) -> Coeff:
        return self.terms.get(tuple(word), ZERO)

    def sorted_terms(self) -> list[tuple[Word, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def rename(self, gens) -> "NCPoly":
        """Reinterpret letters over a generator set with the same size prefix."""
        gens = tuple(gens)
        if gens[: len(self.gens)] != self.gens:
            raise ContextMismatchError(f"{self.gens} is not a prefix of {gens}")
        return NCPoly(self.terms, gens)

    def __str__(self):
        return join_terms([coeff_times(c, _word_text(w, self.gens)) for w, c in self.sorted_terms()])

    def __repr__(self):
        return f"NCPoly({self})"


def _add_terms(t1: dict, t2: dict, sign: int = 1) -> dict:
    out = dict(t1)
    for w, c in t2.items():
        v = out.get(w, ZERO) + (c if sign > 0 else -c)
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _mul_terms(t1: dict, t2: dict) -> dict:
    out: dict[Word, Coeff] = {}
    for w1, c1 in t1.items():
        for w2, c2 in t2.items():
            w = w1 + w2
            out[w] = out.get(w, ZERO) + c1 * c2
    return out


def mul(a: NCPoly, b: NCPoly, degree_cap: int | None = None) -> NCPoly:
    """Concatenation product; refuses to build words longer than the degree cap."""
    a._check(b)
    cap = DEGREE_CAP if degree_cap is None else degree_cap
    if a.terms and b.terms and a.degree() + b.degree() > cap:
        raise CapExceededError("degree", a.degree() + b.degree(), cap)
    return NCPoly(_mul_terms(a.terms, b.terms), a.gens)


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    return mul(a, b) - mul(b, a)


def nested_commutator(first: NCPoly, rest: Sequence[NCPoly]) -> NCPoly:
    """Left-nested bracket ``[[[first, r0], r1], ...]``."""
    out = first
    for r in rest:
        out = commutator(out, r)
    return out


def multiset_permutations(counts: list[int]) -> Iterator[list[int]]:
    """Distinct orderings of a multiset given as per-label multiplicities."""
    n = sum(counts)
    seq: list[int] = []

    def rec():
        if len(seq) == n:
            yield list(seq)
            return
        for label, k in enumerate(counts):
            if k:
                counts[label] -= 1
                seq.append(label)
                yield from rec()
                seq.pop()
                counts[label] += 1

    yield from rec()


def sym_k(*args: NCPoly, cap: int | None = None, degree_cap: int | None = None) -> NCPoly:
    """Symmetrized product: the average of the products over all k! orderings.

    Equal arguments are merged and only distinct orderings of the resulting
    multiset are expanded, each weighted by its multiplicity.
    """
    k = len(args)
    if k == 0:
        raise ValueError("sym_k needs at least one argument")
    kcap = SYM_CAP if cap is None else cap
    if k > kcap:
        raise CapExceededError("Sym_k order", k, kcap)
    gens = args[0].gens
    for a in args[1:]:
        args[0]._check(a)
    dcap = DEGREE_CAP if degree_cap is None else degree_cap
    total_deg = sum(a.degree() for a in args)
    if all(a.terms for a in args) and total_deg > dcap:
        raise CapExceededError("degree", total_deg, dcap)

    distinct: list[NCPoly] = []
    counts: list[int] = []
    for a in args:
        for i, d in enumerate(distinct):
            if d == a:
                counts[i] += 1
                break
        else:
            distinct.append(a)
            counts.append(1)
    weight = Fraction(1, factorial(k))
    for c in counts:
        weight *= factorial(c)

    out: dict[Word, Coeff] = {}
    factors = [d.terms for d in distinct]

    def rec(prefix: dict, remaining: int):
        if remaining == 0:
            for w, c in prefix.items():
                out[w] = out.get(w, ZERO) + c * weight
            return
        for label, left in enumerate(counts):
            if left:
                counts[label] -= 1
                rec(_mul_terms(prefix, factors[label]), remaining - 1)
                counts[label] += 1

    rec({(): ONE}, k)
    return NCPoly(out, gens)


def sym_word(letters: Sequence[int], gens, cap: int | None = None) -> NCPoly:
    """``sym_k`` of single generators, without building intermediate products."""
    kcap = SYM_CAP if cap is None else cap
    if len(letters) > kcap:
        raise CapExceededError("Sym_k order", len(letters), kcap)
    if not letters:
        return NCPoly.one(gens)
    labels = sorted(set(letters))
    counts = [list(letters).count(x) for x in labels]
    weight = Fraction(1, factorial(len(letters)))
    for c in counts:
        weight *= factorial(c)
    terms = {tuple(labels[i] for i in perm): weight for perm in multiset_permutations(counts)}
    return NCPoly(terms, gens)


def diamond(a: NCPoly, b: NCPoly) -> NCPoly:
    return sym_k(a, b)


def abelianize(p: NCPoly) -> CPoly:
    n = len(p.gens)
    out: dict[tuple[int, ...], Coeff] = {}
    for w, c in p.terms.items():
        e = [0] * n
        for i in w:
            e[i] += 1
        e = tuple(e)
        out[e] = out.get(e, ZERO) + c
    return CPoly(out, p.gens)
