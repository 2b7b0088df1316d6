"""Quantization by symmetrization and the bracket/commutator correspondence.

``symmetrize`` sends each commutative monomial to the symmetrized product of
its letters (central-parameter prefactors ride along in the coefficient).
The checks below compare ``[H^sym, F^sym]`` against the symmetrized Leibniz
bracket and record the discrepancy polynomial, never just a boolean.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import randgen
from .coeffs import ZERO
from .cpoly import CPoly
from .errors import CaseError, ContextMismatchError
from .freealg import NCPoly, commutator, sym_word
from .poisson import casimir_check, leibniz_bracket
from .relations import Case, RelationSystem, commutator_with, normal_form, validate_relations


def symmetrize(P: CPoly) -> NCPoly:
    out: dict = {}
    for e, c in P.terms.items():
        letters = [i for i, k in enumerate(e) for _ in range(k)]
        for w, v in sym_word(letters, P.gens).terms.items():
            out[w] = out.get(w, ZERO) + c * v
    return NCPoly(out, P.gens)


def degree_bound(case: Case) -> int:
    """Largest degree of H for which the correspondence is guaranteed."""
    return 2 if case is Case.CONSTANT else 1


@dataclass
class CorrespondenceResult:
    lhs: NCPoly
    rhs: NCPoly
    leibniz: CPoly
    discrepancy: NCPoly
    hypothesis_holds: bool

    @property
    def equal(self) -> bool:
        return self.discrepancy.is_zero()

    def to_dict(self) -> dict:
        return {"leibniz_bracket": str(self.leibniz), "lhs": str(self.lhs), "rhs": str(self.rhs),
                "equal": self.equal, "discrepancy": str(self.discrepancy),
                "degree_hypothesis_holds": self.hypothesis_holds}


def _operator_commutator(H: CPoly, Fs: NCPoly, rel: RelationSystem) -> NCPoly:
    # [H_op, F^sym] for affine H in the general case; the constant term is central
    out = NCPoly.zero(rel.letters)
    for e, c in H.terms.items():
        if sum(e) == 1:
            out = out + commutator_with(e.index(1), Fs, rel) * c
    return out


def bracket_correspondence(H: CPoly, F: CPoly, rel: RelationSystem) -> CorrespondenceResult:
    """Compare ``[H^sym, F^sym]`` with ``{H, F}_N^sym``.

    ``discrepancy`` is ``{H,F}_N^sym - [H^sym, F^sym]``: reduced to PBW normal
    form for constant/linear systems, and taken in the free algebra over T
    (one level of relation substitution) for the general case.
    """
    if H.gens != rel.generators or F.gens != rel.generators:
        raise ContextMismatchError("H and F must be polynomials over the system's generators B")
    G = leibniz_bracket(H, F, rel)
    rhs = symmetrize(G)
    if rel.case is Case.GENERAL:
        if H.degree() > 1:
            raise CaseError("general case requires H affine in B")
        lhs = _operator_commutator(H, symmetrize(F), rel)
        return CorrespondenceResult(lhs, rhs, G, rhs - lhs, True)
    lhs = commutator(symmetrize(H), symmetrize(F))
    disc = normal_form(rhs - lhs, rel)
    return CorrespondenceResult(lhs, rhs, G, disc, H.degree() <= degree_bound(rel.case))


@dataclass
class PairResult:
    i: int
    j: int
    leibniz_zero: bool
    commutator_zero: bool
    discrepancy: NCPoly
    guaranteed: bool

    def to_dict(self) -> dict:
        return {"i": self.i + 1, "j": self.j + 1, "leibniz_bracket_zero": self.leibniz_zero,
                "commutator_zero": self.commutator_zero, "discrepancy": str(self.discrepancy),
                "guaranteed": self.guaranteed}


@dataclass
class QuantizationReport:
    system: str
    case: Case
    r: int
    s: int
    degrees: list[int]
    pairs: list[PairResult]
    condition_a: bool
    condition_b: bool
    condition_b_literal: bool
    assume_poly_independent: bool = False
    defects: list[tuple[int, int]] = field(default_factory=list)

    @property
    def all_leibniz_zero(self) -> bool:
        return all(p.leibniz_zero for p in self.pairs)

    @property
    def all_commutators_zero(self) -> bool:
        return all(p.commutator_zero for p in self.pairs)

    @property
    def verdict(self) -> str:
        if self.defects:
            return "defect"
        if self.all_commutators_zero:
            return "commuting"
        if not self.all_leibniz_zero:
            return "non-involutive"
        return "not-commuting"

    def claim(self) -> str:
        if not self.all_commutators_zero:
            return ("No commutation claim: some required commutator of the symmetrized "
                    "operators is nonzero.")
        bracket = ("{P_i, P_j} = 0 on M (B asserted polynomially independent)"
                   if self.assume_poly_independent else "{P_i, P_j}_N = 0 (Leibniz representation)")
        return (f"All {len(self.pairs)} required pairs satisfy {bracket} and their symmetrized "
                f"operators commute exactly. Conditional: if a subfamily of r' central and s'-r' "
                f"other operators with r'+s' = 2n is quasi-independent (not checked here), it is "
                f"quasi-integrable with r' central integrals.")

    def to_dict(self) -> dict:
        return {"system": self.system, "case": self.case.value, "r": self.r, "s": self.s,
                "degrees": self.degrees,
                "conditions": {"a_centrals": self.condition_a, "b_others": self.condition_b,
                               "b_literal_j_from_2": self.condition_b_literal},
                "pairs": [p.to_dict() for p in self.pairs],
                "all_leibniz_zero": self.all_leibniz_zero,
                "all_commutators_zero": self.all_commutators_zero,
                "defects": [[i + 1, j + 1] for i, j in self.defects],
                "verdict": self.verdict, "claim": self.claim()}


def quantize_check(rel: RelationSystem, centrals: list[CPoly], others: list[CPoly],
                   assume_poly_independent: bool = False) -> QuantizationReport:
    """Check ``[F_i, F_j] = 0`` for every central i and every j, F = P^sym.

    Degree conditions are recorded both with the others-only reading and the
    literal ``j >= 2`` reading. A pair is *guaranteed* when its Leibniz bracket
    vanishes and one member has degree within the case bound; a guaranteed pair
    with a nonzero commutator is reported as a defect.
    """
    polys = list(centrals) + list(others)
    r, s = len(centrals), len(polys)
    if r == 0:
        raise ValueError("at least one central polynomial is required")
    for P in polys:
        if P.gens != rel.generators:
            raise ContextMismatchError("all polynomials must be over the system's generators B")
    bound = degree_bound(rel.case)
    degrees = [P.degree() for P in polys]
    if rel.case is Case.GENERAL and any(d > 1 for d in degrees[:r]):
        raise CaseError("general case requires every central polynomial to be affine in B")
    syms = [symmetrize(P) for P in polys]

    pairs = []
    defects = []
    for i in range(r):
        for j in range(s):
            lz = leibniz_bracket(polys[i], polys[j], rel).is_zero()
            if rel.case is Case.GENERAL:
                comm = _operator_commutator(polys[i], syms[j], rel)
            else:
                comm = normal_form(commutator(syms[i], syms[j]), rel)
            low = i == j or degrees[i] <= bound or degrees[j] <= bound
            guaranteed = lz and low
            pairs.append(PairResult(i, j, lz, comm.is_zero(), comm, guaranteed))
            if guaranteed and not comm.is_zero():
                defects.append((i, j))
    cond_a = all(d <= bound for d in degrees[:r])
    cond_b = all(d <= bound for d in degrees[r:])
    cond_b_lit = all(d <= bound for d in degrees[1:])
    return QuantizationReport(rel.name, rel.case, r, s, degrees, pairs, cond_a, cond_b,
                              cond_b_lit, assume_poly_independent, defects)


@dataclass
class CasimirResult:
    is_casimir: bool
    commutes_with_all: bool
    witnesses: list[tuple[str, NCPoly]]

    def to_dict(self) -> dict:
        return {"is_casimir": self.is_casimir, "commutes_with_all": self.commutes_with_all,
                "witnesses": [{"with": label, "commutator": str(c)} for label, c in self.witnesses]}


def casimir_quantization(C: CPoly, rel: RelationSystem, trials: int = 5,
                         seed: int = 0) -> CasimirResult:
    """Casimir test plus ``[C^sym, B_j]`` and ``[C^sym, P(B)]`` modulo the relations.

    ``P`` ranges over ``trials`` seeded random noncommutative polynomials.
    """
    if rel.case is not Case.LINEAR:
        raise CaseError("Casimir quantization is defined for linear systems")
    if not validate_relations(rel).valid:
        raise CaseError(f"{rel.name} violates the Jacobi identity")
    is_cas = casimir_check(C, rel)
    Cs = symmetrize(C)
    witnesses = []
    for j, name in enumerate(rel.generators):
        witnesses.append((name, normal_form(commutator(Cs, NCPoly.gen(j, rel.generators)), rel)))
    rng = random.Random(seed)
    for t in range(trials):
        P = randgen.ncpoly(rng, rel.generators, max_deg=3, nterms=3)
        witnesses.append((f"random[{t}]: {P}", normal_form(commutator(Cs, P), rel)))
    commutes = all(w.is_zero() for _, w in witnesses)
    return CasimirResult(is_cas, commutes, witnesses)
