"""Leibniz representation of Poisson brackets and Casimir checks."""

from __future__ import annotations

from .coeffs import ONE, ZERO
from .cpoly import CPoly
from .errors import CaseError, ContextMismatchError
from .relations import Case, RelationSystem


def bracket_value_cpoly(rel: RelationSystem, i: int, j: int) -> CPoly:
    """``{B_i, B_j}`` as a commutative polynomial over the full alphabet T."""
    out = {}
    m = len(rel.letters)
    for w, c in rel.bracket(i, j).items():
        e = [0] * m
        for k in w:
            e[k] += 1
        out[tuple(e)] = out.get(tuple(e), ZERO) + c
    return CPoly(out, rel.letters)


def _as_b_poly(p: CPoly, rel: RelationSystem) -> CPoly:
    if p.gens == rel.generators:
        return p
    if p.gens == rel.letters:
        # accept a T-context poly that only uses B letters
        l = rel.l
        if any(any(e[l:]) for e in p.terms):
            raise ContextMismatchError("Leibniz bracket inputs must be polynomials in B only")
        return CPoly({e[:l]: c for e, c in p.terms.items()}, rel.generators)
    raise ContextMismatchError(f"polynomial over {p.gens}, system {rel.name} over {rel.generators}")


def leibniz_bracket(H: CPoly, F: CPoly, rel: RelationSystem) -> CPoly:
    """``{H, F}_N = sum_ij {B_i, B_j} dH/dB_i dF/dB_j``, evaluated exactly.

    The result is a polynomial over B for constant and linear systems and
    over T for the general case.
    """
    H = _as_b_poly(H, rel)
    F = _as_b_poly(F, rel)
    l = rel.l
    dH = [H.diff(i).embed(rel.letters) for i in range(l)]
    dF = [F.diff(j).embed(rel.letters) for j in range(l)]
    out = CPoly.zero(rel.letters)
    for i in range(l):
        if dH[i].is_zero():
            continue
        for j in range(l):
            if i == j or dF[j].is_zero():
                continue
            v = bracket_value_cpoly(rel, i, j)
            if v:
                out = out + v * dH[i] * dF[j]
    return out


def casimir_check(C: CPoly, rel: RelationSystem) -> bool:
    """True iff ``{C, B_i}_N`` vanishes identically for every generator."""
    if rel.case is not Case.LINEAR:
        raise CaseError("Casimir functions are defined for linear (Lie co-algebra) systems")
    return all(leibniz_bracket(C, CPoly.gen(i, rel.generators), rel).is_zero()
               for i in range(rel.l))


def generator_polys(rel: RelationSystem) -> list[CPoly]:
    return [CPoly.gen(i, rel.generators) for i in range(rel.l)]


def one(rel: RelationSystem) -> CPoly:
    return CPoly.constant(ONE, rel.generators)
