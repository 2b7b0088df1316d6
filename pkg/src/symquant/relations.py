"""Relation systems for generator brackets and PBW normal forms modulo them."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from enum import Enum
from typing import Mapping, Sequence

from .coeffs import ONE, ZERO, Coeff, CoeffPoly
from .errors import CaseError, ContextMismatchError, RelationError, UnknownBracketError
from .freealg import NCPoly, Word, commutator

# PBW reduction recurses through correction words
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class Case(str, Enum):
    CONSTANT = "constant"
    LINEAR = "linear"
    GENERAL = "general"


# A bracket value is a map from a word over T (empty word for the constant
# case, single letters otherwise) to a coefficient.
BracketValue = dict[Word, Coeff]


@dataclass(frozen=True, eq=False)
class RelationSystem:
    """Generators B, optional extra letters T \\ B, central parameters D and brackets.

    ``brackets`` holds only pairs ``i < j`` over B; the reversed pair is the
    negation and ``[B_i, B_i] = 0``. Letters ``0..l-1`` are B, ``l..m-1`` the
    extended generators.
    """

    name: str
    case: Case
    generators: tuple[str, ...]
    brackets: Mapping[tuple[int, int], BracketValue]
    extended_generators: tuple[str, ...] = ()
    central_params: tuple[str, ...] = ()
    _nf_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _report: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        names = self.letters + self.central_params
        if len(set(names)) != len(names):
            raise RelationError(f"duplicate names in {names}")
        if self.extended_generators and self.case is not Case.GENERAL:
            raise RelationError("extended generators are only allowed in the general case")
        l, m = len(self.generators), len(self.letters)
        for (i, j), value in self.brackets.items():
            if not (0 <= i < j < l):
                raise RelationError(f"bracket index pair {(i, j)} is not i < j over B")
            for w, c in value.items():
                if self.case is Case.CONSTANT and w != ():
                    raise RelationError("constant-case bracket values carry no generator target")
                if self.case is Case.LINEAR and (len(w) != 1 or not 0 <= w[0] < l):
                    raise RelationError(f"linear-case target {w} must be a single generator of B")
                if self.case is Case.GENERAL and (len(w) != 1 or not 0 <= w[0] < m):
                    raise RelationError(f"general-case target {w} must be a single letter of T")
                if isinstance(c, CoeffPoly) and c.params != self.central_params:
                    raise RelationError("coefficient parameters do not match central_params")

    @property
    def letters(self) -> tuple[str, ...]:
        """The full alphabet T (equal to B outside the general case)."""
        return self.generators + self.extended_generators

    @property
    def l(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise RelationError(f"unknown generator {name!r} in {self.name}") from None

    def bracket(self, i: int, j: int) -> BracketValue:
        """Value of ``[B_i, B_j]`` (equivalently ``{B_i, B_j}``) as word -> coefficient."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {w: -c for w, c in self.brackets.get((j, i), {}).items()}

    def bracket_poly(self, i: int, j: int) -> NCPoly:
        return NCPoly(self.bracket(i, j), self.letters)


@dataclass
class ValidationReport:
    system: str
    case: Case
    valid: bool
    violations: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"system": self.system, "case": self.case.value, "valid": self.valid,
                "violations": self.violations}


def _structure_table(rel: RelationSystem) -> list[list[dict[int, Coeff]]]:
    l = rel.l
    table = [[{} for _ in range(l)] for _ in range(l)]
    for i in range(l):
        for j in range(l):
            table[i][j] = {w[0]: c for w, c in rel.bracket(i, j).items()}
    return table


def validate_relations(rel: RelationSystem) -> ValidationReport:
    """Index checks for every case plus the Jacobi sum identity for linear systems."""
    if rel._report:
        return rel._report[0]
    violations = []
    if rel.case is Case.LINEAR:
        from .coeffs import format_scalar

        c = _structure_table(rel)
        l = rel.l
        for i in range(l):
            for j in range(l):
                for h in range(l):
                    for m in range(l):
                        total: Coeff = ZERO
                        for k in range(l):
                            total = (total + c[i][j].get(k, ZERO) * c[k][h].get(m, ZERO)
                                     + c[h][i].get(k, ZERO) * c[k][j].get(m, ZERO)
                                     + c[j][h].get(k, ZERO) * c[k][i].get(m, ZERO))
                        if total:
                            value = str(total) if isinstance(total, CoeffPoly) else format_scalar(total)
                            violations.append({"i": rel.generators[i], "j": rel.generators[j],
                                               "h": rel.generators[h], "m": rel.generators[m],
                                               "sum": value})
    report = ValidationReport(rel.name, rel.case, not violations, violations)
    rel._report.append(report)
    return report


def canonical_system(n: int) -> RelationSystem:
    """Canonical pairs ordered (x_1..x_n, p_1..p_n) with {p_i, x_j} = delta_ij."""
    if n < 1:
        raise RelationError("canonical_system needs n >= 1")
    if n == 1:
        gens = ("x", "p")
    else:
        gens = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"p{i}" for i in range(1, n + 1))
    # stored as i < j: {x_i, p_i} = -1
    brackets = {(i, n + i): {(): -ONE} for i in range(n)}
    return RelationSystem(f"canonical{n}", Case.CONSTANT, gens, brackets)


def _check_alphabet(p: NCPoly, rel: RelationSystem, letters: Sequence[str]):
    if tuple(p.gens) != tuple(letters):
        raise ContextMismatchError(f"polynomial over {p.gens}, relation system over {tuple(letters)}")


def substituting_commutator(i: int, word: Sequence[int], rel: RelationSystem) -> NCPoly:
    """``[B_i, w]`` by the Leibniz expansion with each letter bracket replaced by its value.

    The result lives in the free algebra over T. In the general case brackets
    with extended letters are not determined, so such words are refused.
    """
    word = tuple(word)
    if not 0 <= i < rel.l:
        raise RelationError(f"generator index {i} outside B")
    out: dict[Word, Coeff] = {}
    for r, letter in enumerate(word):
        if letter >= rel.l:
            raise UnknownBracketError(
                f"bracket [{rel.generators[i]}, {rel.letters[letter]}] is not determined by {rel.name}")
        prefix, suffix = word[:r], word[r + 1:]
        for w, c in rel.bracket(i, letter).items():
            key = prefix + w + suffix
            out[key] = out.get(key, ZERO) + c
    return NCPoly(out, rel.letters)


def commutator_with(i: int, p: NCPoly, rel: RelationSystem) -> NCPoly:
    """``[B_i, p]`` for an NCPoly over B, expanded word by word with substitution."""
    out = NCPoly.zero(rel.letters)
    for w, c in p.terms.items():
        out = out + substituting_commutator(i, w, rel) * c
    return out


def _require_rewritable(rel: RelationSystem):
    if rel.case is Case.GENERAL:
        raise CaseError("normal forms are only defined for constant and linear systems")
    if rel.case is Case.LINEAR and not validate_relations(rel).valid:
        raise CaseError(f"{rel.name} violates the Jacobi identity; rewriting would not be confluent")


def _accumulate(out: dict, terms: dict, c: Coeff):
    for w, v in terms.items():
        s = out.get(w, ZERO) + c * v
        if s:
            out[w] = s
        else:
            out.pop(w, None)


def _times_letter(u: Word, a: int, rel: RelationSystem) -> dict[Word, Coeff]:
    """Normal form of ``u * a`` for a PBW-sorted word ``u``.

    With ``u = P Q`` where ``Q`` holds the letters greater than ``a``:
    ``Q a = a Q + sum_r Q_<r [Q_r, a] Q_>r``. Correction words are shorter,
    so the recursion terminates.
    """
    key = (u, a)
    cache = rel._nf_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    cut = len(u)
    while cut and u[cut - 1] > a:
        cut -= 1
    out = {u[:cut] + (a,) + u[cut:]: ONE}
    for r in range(cut, len(u)):
        for w, c in rel.bracket(u[r], a).items():
            _accumulate(out, _reduce_from(u[:r], w + u[r + 1:], rel), c)
    cache[key] = out
    return out


def _reduce_from(sorted_prefix: Word, rest: Word, rel: RelationSystem) -> dict[Word, Coeff]:
    state = {sorted_prefix: ONE}
    for a in rest:
        nxt: dict[Word, Coeff] = {}
        for u, c in state.items():
            _accumulate(nxt, _times_letter(u, a, rel), c)
        state = nxt
    return state


def _nf_word(word: Word, rel: RelationSystem) -> dict[Word, Coeff]:
    return _reduce_from((), word, rel)


def normal_form(p: NCPoly, rel: RelationSystem) -> NCPoly:
    """PBW normal form: every word index-nondecreasing, modulo the relations.

    Unique for valid constant and linear systems, so two elements are equal
    modulo the relations exactly when their normal forms coincide.
    """
    _require_rewritable(rel)
    _check_alphabet(p, rel, rel.generators)
    out: dict[Word, Coeff] = {}
    for w, c in p.terms.items():
        for w2, c2 in _nf_word(w, rel).items():
            out[w2] = out.get(w2, ZERO) + c * c2
    return NCPoly(out, p.gens)


def _times_poly(state: dict[Word, Coeff], b: NCPoly, rel: RelationSystem) -> dict[Word, Coeff]:
    out: dict[Word, Coeff] = {}
    for w, cb in b.terms.items():
        cur = state
        for a in w:
            nxt: dict[Word, Coeff] = {}
            for u, c in cur.items():
                _accumulate(nxt, _times_letter(u, a, rel), c)
            cur = nxt
        _accumulate(out, cur, cb)
    return out


def nf_product(a: NCPoly, b: NCPoly, rel: RelationSystem) -> NCPoly:
    """``NF(a * b)`` without expanding the free-algebra product first."""
    _require_rewritable(rel)
    _check_alphabet(a, rel, rel.generators)
    _check_alphabet(b, rel, rel.generators)
    return NCPoly(_times_poly(normal_form(a, rel).terms, b, rel), a.gens)


def normal_form_sym(args: Sequence[NCPoly], rel: RelationSystem) -> NCPoly:
    """``NF(Sym_k(args))`` via ``Sym_k(S) = 1/k sum_i Sym_{k-1}(S - i) * a_i``.

    Works over sub-multisets of the arguments (at most 2^k states) rather than
    the k! orderings; equal to ``normal_form(sym_k(*args))``.
    """
    _require_rewritable(rel)
    if not args:
        return NCPoly.one(rel.generators)
    distinct: list[NCPoly] = []
    full: list[int] = []
    for a in args:
        _check_alphabet(a, rel, rel.generators)
        for i, d in enumerate(distinct):
            if d == a:
                full[i] += 1
                break
        else:
            distinct.append(a)
            full.append(1)
    memo: dict[tuple[int, ...], dict[Word, Coeff]] = {(0,) * len(full): {(): ONE}}

    def sym_of(counts: tuple[int, ...]) -> dict[Word, Coeff]:
        hit = memo.get(counts)
        if hit is not None:
            return hit
        k = sum(counts)
        out: dict[Word, Coeff] = {}
        for i, n in enumerate(counts):
            if n:
                sub = counts[:i] + (n - 1,) + counts[i + 1:]
                # the n equal choices of a_i give the same term
                _accumulate(out, _times_poly(sym_of(sub), distinct[i], rel), Fraction(n, k))
        memo[counts] = out
        return out

    return NCPoly(sym_of(tuple(full)), rel.generators)


def equal_mod_relations(a: NCPoly, b: NCPoly, rel: RelationSystem) -> bool:
    return normal_form(a - b, rel).is_zero()


def nf_commutator(a: NCPoly, b: NCPoly, rel: RelationSystem) -> NCPoly:
    return normal_form(commutator(a, b), rel)
