"""Exact free-algebra checks of the symmetrized-product identities.

Every identity here holds in an arbitrary associative algebra, so it is
checked on distinct free generators: that is the strongest form, and it makes
these checks independent of any relation system. Wick-type formulas, which
need central pairings, are instead compared against PBW rewriting in a
constant system that realizes the pairings.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from . import randgen
from .coeffs import ONE, ZERO
from .cpoly import CPoly
from .errors import CapExceededError, RelationError
from .freealg import SYM_CAP, NCPoly, commutator, diamond, nested_commutator, sym_k
from .relations import (Case, RelationSystem, canonical_system, nf_product, normal_form,
                        normal_form_sym)
from .symmetrization import symmetrize


@dataclass
class VerificationResult:
    name: str
    k: int
    residual: NCPoly

    @property
    def holds(self) -> bool:
        return self.residual.is_zero()

    def to_dict(self) -> dict:
        return {"identity": self.name, "k": self.k, "holds": self.holds,
                "residual": str(self.residual), "residual_terms": len(self.residual.terms)}


# -- Bernoulli coefficients ---------------------------------------------------

@dataclass(frozen=True)
class BernoulliTable:
    values: tuple[Fraction, ...]

    def __getitem__(self, h: int) -> Fraction:
        if h < 1:
            raise IndexError(h)
        return self.values[h - 1]

    def __len__(self):
        return len(self.values)


def bernoulli_coeffs(h_max: int) -> BernoulliTable:
    """c_1 = 1/12, c_h = -1/(2h+1) * sum_{i<h} c_i c_{h-i}."""
    if h_max < 1:
        raise ValueError("h_max must be >= 1")
    c = [Fraction(1, 12)]
    for h in range(2, h_max + 1):
        s = sum((c[i - 1] * c[h - i - 1] for i in range(1, h)), ZERO)
        c.append(-s / (2 * h + 1))
    return BernoulliTable(tuple(c))


def bernoulli_number(n: int) -> Fraction:
    """B_n from the classical recurrence sum_{j<=n} C(n+1, j) B_j = 0 (B_1 = -1/2)."""
    B = [ONE]
    for m in range(1, n + 1):
        B.append(-sum((comb(m + 1, j) * B[j] for j in range(m)), ZERO) / (m + 1))
    return B[n]


def verify_bernoulli(h_max: int) -> list[dict]:
    table = bernoulli_coeffs(h_max)
    rows = []
    for h in range(1, h_max + 1):
        expected = bernoulli_number(2 * h) / factorial(2 * h)
        rows.append({"h": h, "c": table[h], "bernoulli_ratio": expected,
                     "agrees": table[h] == expected})
    return rows


# -- A diamond Sym_k expansion ----------------------------------------------------

def free_generators(*names: str) -> list[NCPoly]:
    return NCPoly.generators(names)


def residual_A_k(a: NCPoly, bs: Sequence[NCPoly]) -> NCPoly:
    """``a ⋄ Sym_k(bs) - Sym_{k+1}(a, bs)``."""
    if len(bs) + 1 > SYM_CAP:
        raise CapExceededError("Sym_k order", len(bs) + 1, SYM_CAP)
    return diamond(a, sym_k(*bs)) - sym_k(a, *bs)


def _complement(k: int, chosen: Sequence[int]) -> list[int]:
    taken = set(chosen)
    return [j for j in range(k) if j not in taken]


def correction_C(k: int, h: int, a: NCPoly, bs: Sequence[NCPoly]) -> NCPoly:
    """Sum over ordered distinct 2h-tuples of Sym(iterated bracket of a, complementary bs)."""
    if len(bs) != k:
        raise ValueError(f"expected {k} elements, got {len(bs)}")
    if not 1 <= h <= k // 2:
        raise ValueError(f"h={h} outside 1..{k // 2}")
    out = NCPoly.zero(a.gens)
    for idx in itertools.permutations(range(k), 2 * h):
        inner = nested_commutator(a, [bs[i] for i in idx])
        out = out + sym_k(inner, *[bs[j] for j in _complement(k, idx)])
    return out


def verify_lemma1(k: int) -> VerificationResult:
    if not 2 <= k <= SYM_CAP - 1:
        raise CapExceededError("lemma order k", k, SYM_CAP - 1)
    a, *bs = free_generators("A", *[f"B{i}" for i in range(1, k + 1)])
    c = bernoulli_coeffs(max(1, k // 2))
    rhs = NCPoly.zero(a.gens)
    for h in range(1, k // 2 + 1):
        rhs = rhs + correction_C(k, h, a, bs) * c[h]
    return VerificationResult("lemma1", k, residual_A_k(a, bs) - rhs)


def verify_cyclic_residuals(k: int) -> VerificationResult:
    """The k+1 residuals obtained by swapping C_0 into each slot sum to zero."""
    cs = free_generators(*[f"C{i}" for i in range(k + 1)])
    total = NCPoly.zero(cs[0].gens)
    for r in range(k + 1):
        args = list(cs)
        args[0], args[r] = args[r], args[0]
        total = total + residual_A_k(args[0], args[1:])
    return VerificationResult("cyclic_residuals", k, total)


def verify_distr() -> VerificationResult:
    """``B1⋄(B2⋄A) - B2⋄(B1⋄A) = 1/4 [[B1,B2],A]``."""
    a, b1, b2 = free_generators("A", "B1", "B2")
    lhs = diamond(b1, diamond(b2, a)) - diamond(b2, diamond(b1, a))
    rhs = commutator(commutator(b1, b2), a) * Fraction(1, 4)
    return VerificationResult("distr", 2, lhs - rhs)


# -- commutator of a product with Sym_k ----------------------------------------

def verify_pc1(k: int) -> VerificationResult:
    """``[A, Sym_k(B)] = sum_i Sym_k(B_1, .., [A, B_i], .., B_k)``."""
    if not 1 <= k <= SYM_CAP - 1:
        raise CapExceededError("order k", k, SYM_CAP - 1)
    a, *bs = free_generators("A", *[f"B{i}" for i in range(1, k + 1)])
    lhs = commutator(a, sym_k(*bs))
    rhs = NCPoly.zero(a.gens)
    for i in range(k):
        args = list(bs)
        args[i] = commutator(a, bs[i])
        rhs = rhs + sym_k(*args)
    return VerificationResult("pc1", k, lhs - rhs)


def correction_D_E(k: int, h: int, a1: NCPoly, a2: NCPoly,
                   bs: Sequence[NCPoly]) -> tuple[NCPoly, NCPoly]:
    """The two correction sums of the ``[A1⋄A2, Sym_k]`` expansion for one h.

    D uses ``[^{2h+1} A1, B_i1], .., B_i2h], A2]``; E pairs
    ``[^{2h} A1, B_i1], .., B_i2h]`` with ``[A2, B_i(2h+1)]``. E is zero when
    ``h > (k-1)//2``.
    """
    if len(bs) != k:
        raise ValueError(f"expected {k} elements, got {len(bs)}")
    if not 1 <= h <= k // 2:
        raise ValueError(f"h={h} outside 1..{k // 2}")
    D = NCPoly.zero(a1.gens)
    for idx in itertools.permutations(range(k), 2 * h):
        inner = commutator(nested_commutator(a1, [bs[i] for i in idx]), a2)
        D = D + sym_k(inner, *[bs[j] for j in _complement(k, idx)])
    E = NCPoly.zero(a1.gens)
    if h <= (k - 1) // 2:
        for idx in itertools.permutations(range(k), 2 * h + 1):
            inner = nested_commutator(a1, [bs[i] for i in idx[:-1]])
            E = E + sym_k(inner, commutator(a2, bs[idx[-1]]),
                          *[bs[j] for j in _complement(k, idx)])
    return D, E


def pc2_rhs(a1: NCPoly, a2: NCPoly, bs: Sequence[NCPoly]) -> NCPoly:
    k = len(bs)
    c = bernoulli_coeffs(max(1, k // 2))

    def half(x1, x2):
        out = NCPoly.zero(a1.gens)
        for i in range(k):
            args = list(bs)
            args[i] = commutator(x2, bs[i])
            out = out + sym_k(x1, *args)
        for h in range(1, k // 2 + 1):
            D, E = correction_D_E(k, h, x1, x2, bs)
            out = out - D * c[h] + E * c[h]
        return out

    return half(a1, a2) + half(a2, a1)


def verify_pc2(k: int) -> VerificationResult:
    if not 2 <= k <= SYM_CAP - 2:
        raise CapExceededError("order k", k, SYM_CAP - 2)
    a1, a2, *bs = free_generators("A1", "A2", *[f"B{i}" for i in range(1, k + 1)])
    lhs = commutator(diamond(a1, a2), sym_k(*bs))
    return VerificationResult("pc2", k, lhs - pc2_rhs(a1, a2, bs))


# -- central pairings -----------------------------------------------------------

def _shape(d: Sequence[Sequence[Fraction]]) -> tuple[int, int]:
    l = len(d)
    if l == 0:
        raise ValueError("pairing matrix must have at least one row")
    m = len(d[0])
    if m == 0 or any(len(row) != m for row in d):
        raise ValueError("pairing matrix must be rectangular with at least one column")
    return l, m


def pairing_names(l: int, m: int) -> tuple[str, ...]:
    return tuple(f"L{i}" for i in range(1, l + 1)) + tuple(f"M{j}" for j in range(1, m + 1))


def wick_system(d, ll=None, mm=None) -> RelationSystem:
    """Constant system on (L.., M..) with ``[L_i, M_j] = d_ij``.

    ``ll``/``mm`` optionally give constant brackets ``[L_i, L_j]``/``[M_i, M_j]``
    (upper-triangular entries are used); they default to zero.
    """
    l, m = _shape(d)
    br = {}
    for i in range(l):
        for j in range(m):
            if d[i][j]:
                br[(i, l + j)] = {(): Fraction(d[i][j])}
    for block, off, n in ((ll, 0, l), (mm, l, m)):
        if block is None:
            continue
        for i in range(n):
            for j in range(i + 1, n):
                if block[i][j]:
                    br[(off + i, off + j)] = {(): Fraction(block[i][j])}
    return RelationSystem(f"wick{l}x{m}", Case.CONSTANT, pairing_names(l, m), br)


def pairing_blocks(d, odd_only: bool = False):
    """Yield ``(weight * pairing, rest)`` for each pair of index sets of size h.

    ``rest`` lists the unpaired letter indices (L first, then M); the block it
    stands for is ``Sym(rest)``. With ``odd_only`` only odd h are kept, with
    weight ``2^-(h-1)`` instead of ``2^-h``.
    """
    l, m = _shape(d)
    for h in range(0, min(l, m) + 1):
        if odd_only and h % 2 == 0:
            continue
        weight = Fraction(1, 2 ** (h - 1)) if odd_only else Fraction(1, 2 ** h)
        for I in itertools.combinations(range(l), h):
            for J in itertools.combinations(range(m), h):
                pairing = ZERO
                for pi in itertools.permutations(range(h)):
                    prod = ONE
                    for r in range(h):
                        prod *= Fraction(d[I[r]][J[pi[r]]])
                    pairing += prod
                if pairing:
                    rest = [i for i in range(l) if i not in I] + [l + j for j in range(m) if j not in J]
                    yield weight * pairing, rest


def _pairing_sum(d, odd_only: bool) -> NCPoly:
    l, m = _shape(d)
    gens = pairing_names(l, m)
    letters = NCPoly.generators(gens)
    out = NCPoly.zero(gens)
    for c, rest in pairing_blocks(d, odd_only):
        block = sym_k(*(letters[i] for i in rest)) if rest else NCPoly.one(gens)
        out = out + block * c
    return out


def pairing_sum_nf(d, rel: RelationSystem, odd_only: bool = False) -> NCPoly:
    """Normal form of the Wick sum, reducing each Sym block without expanding it.

    Equal to ``normal_form(wick_product(d), rel)`` (or of ``wick_commutator``
    with ``odd_only``) by linearity of the normal form.
    """
    letters = NCPoly.generators(rel.generators)
    out = NCPoly.zero(rel.generators)
    for c, rest in pairing_blocks(d, odd_only):
        out = out + normal_form_sym([letters[i] for i in rest], rel) * c
    return out


def wick_oracle(d, rel: RelationSystem) -> tuple[NCPoly, NCPoly]:
    """PBW reductions of ``Sym_l(L) Sym_m(M)`` and ``[Sym_l(L), Sym_m(M)]``."""
    l, _ = _shape(d)
    letters = NCPoly.generators(rel.generators)
    A = normal_form_sym(letters[:l], rel)
    B = normal_form_sym(letters[l:], rel)
    AB = nf_product(A, B, rel)
    return AB, AB - nf_product(B, A, rel)


def wick_product(d) -> NCPoly:
    """``Sym_l(L) Sym_m(M)`` expanded over pairings, for central ``[L_i, M_j] = d_ij``."""
    return _pairing_sum(d, odd_only=False)


def wick_commutator(d) -> NCPoly:
    """``[Sym_l(L), Sym_m(M)]``: odd pairing orders only, weight ``2^-(h-1)``."""
    return _pairing_sum(d, odd_only=True)


def check_shuffle(sigma: Sequence[int], l: int, m: int) -> list[int]:
    """Validate a one-line permutation of 1..l+m keeping L and M blocks in order.

    Returns the 0-based position of each object (the inverse permutation).
    """
    n = l + m
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{n}")
    pos = [0] * n
    for p, obj in enumerate(sigma):
        pos[obj - 1] = p
    if any(pos[i] > pos[i + 1] for i in range(l - 1)) or \
            any(pos[l + j] > pos[l + j + 1] for j in range(m - 1)):
        raise ValueError(f"{tuple(sigma)} reorders the L block or the M block")
    return pos


def transposition_expand(d, sigma: Sequence[int]) -> NCPoly:
    """Rewrite ``L_1..L_l M_1..M_m`` as the sigma-ordered word plus pairing terms.

    A pairing ``(L_i, M_j)`` contributes ``d_ij`` only when ``L_i`` sits after
    ``M_j`` in the sigma order; the surviving letters keep sigma's order.
    """
    l, m = _shape(d)
    pos = check_shuffle(sigma, l, m)
    gens = pairing_names(l, m)

    def dt(i, j):
        return Fraction(d[i][j]) if pos[i] > pos[l + j] else ZERO

    out: dict = {}
    for h in range(0, min(l, m) + 1):
        for I in itertools.combinations(range(l), h):
            for J in itertools.combinations(range(m), h):
                pairing = ZERO
                for pi in itertools.permutations(range(h)):
                    prod = ONE
                    for r in range(h):
                        prod *= dt(I[r], J[pi[r]])
                    pairing += prod
                if not pairing:
                    continue
                removed = set(I) | {l + j for j in J}
                word = tuple(obj - 1 for obj in sigma if obj - 1 not in removed)
                out[word] = out.get(word, ZERO) + pairing
    return NCPoly(out, gens)


def shuffle_word(sigma: Sequence[int], l: int, m: int) -> NCPoly:
    return NCPoly.word([obj - 1 for obj in sigma], pairing_names(l, m))


# -- Moyal bracket -------------------------------------------------------------

def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def moyal_bracket(H: CPoly, F: CPoly, n: int) -> CPoly:
    """Classical polynomial G with ``[H^sym, F^sym] = G^sym`` for canonical pairs.

    Sum over multi-indices with ``|alpha + beta| = 2k+1`` of
    ``(-1)^|alpha| / (2^2k alpha! beta!) * d_x^alpha d_p^beta H * d_x^beta d_p^alpha F``,
    under the convention ``{p_i, x_j} = delta_ij``; the k = 0 part is the
    Leibniz bracket. The sum is finite because H and F are polynomials.
    """
    gens = canonical_system(n).generators
    if H.gens != gens or F.gens != gens:
        raise RelationError(f"moyal_bracket expects polynomials over {gens}")
    out = CPoly.zero(gens)
    top = min(H.degree(), F.degree())
    order = 1
    while order <= top:
        k = (order - 1) // 2
        for split in _compositions(order, 2 * n):
            alpha, beta = split[:n], split[n:]
            dH, dF = H, F
            for i in range(n):
                dH = dH.diff(i, alpha[i]).diff(n + i, beta[i])
                dF = dF.diff(i, beta[i]).diff(n + i, alpha[i])
            if dH.is_zero() or dF.is_zero():
                continue
            denom = 4 ** k
            for v in alpha + beta:
                denom *= factorial(v)
            sign = -1 if sum(alpha) % 2 else 1
            out = out + dH * dF * Fraction(sign, denom)
        order += 2
    return out


# -- seeded oracle sweeps --------------------------------------------------------

def _random_triangle(rng, n: int):
    return [[randgen.scalar(rng) if j > i else ZERO for j in range(n)] for i in range(n)]


def verify_wick(l: int, m: int, trials: int, seed: int = 0) -> list[VerificationResult]:
    """Compare both Wick formulas with PBW rewriting on random pairing matrices.

    Odd-numbered trials also give random constant ``[L_i, L_j]`` and
    ``[M_i, M_j]``, on which the formulas place no hypothesis.
    """
    if l + m > SYM_CAP:
        raise CapExceededError("Sym_k order", l + m, SYM_CAP)
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        d = randgen.matrix(rng, l, m)
        ll = mm = None
        if t % 2:
            ll, mm = _random_triangle(rng, l), _random_triangle(rng, m)
        rel = wick_system(d, ll, mm)
        product, comm = wick_oracle(d, rel)
        out.append(VerificationResult(f"wick_product[{t}]", l + m, pairing_sum_nf(d, rel) - product))
        out.append(VerificationResult(f"wick_commutator[{t}]", l + m,
                                      pairing_sum_nf(d, rel, odd_only=True) - comm))
    return out


def random_shuffle(rng, l: int, m: int) -> list[int]:
    """A uniformly random element of the (l, m) shuffles in one-line form."""
    slots = set(rng.sample(range(l + m), l))
    sigma, li, mi = [], 1, l + 1
    for p in range(l + m):
        if p in slots:
            sigma.append(li)
            li += 1
        else:
            sigma.append(mi)
            mi += 1
    return sigma


def verify_transposition(trials: int, seed: int = 0, max_size: int = 4) -> list[VerificationResult]:
    """Random (sigma, d): the expansion and the plain word have equal normal forms."""
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        l, m = rng.randint(1, max_size), rng.randint(1, max_size)
        d = randgen.matrix(rng, l, m)
        sigma = random_shuffle(rng, l, m)
        rel = wick_system(d)
        word = NCPoly.word(range(l + m), rel.generators)
        residual = normal_form(transposition_expand(d, sigma) - word, rel)
        out.append(VerificationResult(f"transposition{tuple(sigma)}", l + m, residual))
    return out


def verify_moyal(n: int, deg: int, trials: int, seed: int = 0) -> list[VerificationResult]:
    """``[H^sym, F^sym] - G^sym`` reduced modulo the canonical relations."""
    rel = canonical_system(n)
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        H = randgen.cpoly(rng, rel.generators, deg)
        F = randgen.cpoly(rng, rel.generators, deg)
        G = moyal_bracket(H, F, n)
        lhs = commutator(symmetrize(H), symmetrize(F))
        out.append(VerificationResult(f"moyal[{t}]", n, normal_form(lhs - symmetrize(G), rel)))
    return out
