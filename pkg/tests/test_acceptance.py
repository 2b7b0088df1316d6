"""Acceptance criteria 1-12, each at its stated tolerance (exact) and time limit.

Every test records one PASS/FAIL line, printed in the pytest terminal summary
(or directly with ``python tests/test_acceptance.py``).
"""

import json
import random
import time
from fractions import Fraction

from acceptance_log import record
from symquant import randgen
from symquant.algebra_io import preset
from symquant.cli import main
from symquant.freealg import NCPoly, abelianize, sym_k
from symquant.identities import (transposition_expand, verify_distr, verify_lemma1,
                                 verify_moyal, verify_pc1, verify_pc2, verify_transposition,
                                 verify_wick, wick_product)
from symquant.parsing import parse_expr
from symquant.poisson import leibniz_bracket
from symquant.relations import canonical_system, normal_form
from symquant.symmetrization import (bracket_correspondence, casimir_quantization,
                                     quantize_check, symmetrize)


def cli_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_criterion_01_bernoulli(capsys):
    t = time.perf_counter()
    code, report = cli_json(capsys, "verify", "bernoulli", "--hmax", "5")
    elapsed = time.perf_counter() - t
    got = [r["c"] for r in report["results"]]
    expected = ["1/12", "-1/720", "1/30240", "-1/1209600", "1/47900160"]
    ok = code == 0 and got == expected and elapsed < 1
    record(1, ok, f"c_1..c_5 = {', '.join(got)} ({elapsed:.2f} s)")
    assert ok


def test_criterion_02_lemma1():
    times = {}
    holds = True
    for k in (2, 3, 4, 5):
        t = time.perf_counter()
        holds &= verify_lemma1(k).holds
        times[k] = time.perf_counter() - t
    ok = holds and times[5] < 30
    record(2, ok, f"A<>Sym_k expansion holds exactly for k=2..5 ({times[5]:.2f} s at k=5)")
    assert ok


def test_criterion_03_pc1_pc2():
    pc1 = all(verify_pc1(k).holds for k in range(1, 6))
    pc2 = True
    for k in (2, 3, 4):
        t = time.perf_counter()
        pc2 &= verify_pc2(k).holds
        elapsed = time.perf_counter() - t
    ok = pc1 and pc2 and elapsed < 60
    record(3, ok, f"pc1 k=1..5 exact: {pc1}; pc2 k=2..4 exact: {pc2} ({elapsed:.2f} s at k=4)")
    assert ok


def test_criterion_04_distr():
    ok = verify_distr().holds
    record(4, ok, "B1<>(B2<>A) - B2<>(B1<>A) = 1/4 [[B1,B2],A] in the free algebra")
    assert ok


def test_criterion_05_wick():
    t = time.perf_counter()
    failures = 0
    count = 0
    for l in range(1, 5):
        for m in range(1, 5):
            results = verify_wick(l, m, 20, seed=100 * l + m)
            count += len(results)
            failures += sum(not r.holds for r in results)
    elapsed = time.perf_counter() - t

    d = randgen.matrix(random.Random(52), 2, 3)
    L1, L2, M1, M2, M3 = NCPoly.generators(("L1", "L2", "M1", "M2", "M3"))
    display = (sym_k(L1, L2, M1, M2, M3)
               + (sym_k(L2, M2, M3) * d[0][0] + sym_k(L2, M1, M3) * d[0][1]
                  + sym_k(L2, M1, M2) * d[0][2] + sym_k(L1, M2, M3) * d[1][0]
                  + sym_k(L1, M1, M3) * d[1][1] + sym_k(L1, M1, M2) * d[1][2]) * Fraction(1, 2)
               + (M3 * (d[0][0] * d[1][1] + d[0][1] * d[1][0])
                  + M2 * (d[0][0] * d[1][2] + d[0][2] * d[1][0])
                  + M1 * (d[0][1] * d[1][2] + d[0][2] * d[1][1])) * Fraction(1, 4))
    shown = wick_product(d) == display
    ok = failures == 0 and shown and elapsed < 60
    record(5, ok, f"{count - failures}/{count} oracle checks over l,m <= 4 x 20 matrices; "
                  f"l=2,m=3 display reproduced: {shown} ({elapsed:.1f} s)")
    assert ok


def test_criterion_06_transposition():
    d = [[Fraction(2), Fraction(3), Fraction(5)], [Fraction(7), Fraction(11), Fraction(13)]]
    L1, L2, M1, M2, M3 = NCPoly.generators(("L1", "L2", "M1", "M2", "M3"))
    d11, d21, d22 = d[0][0], d[1][0], d[1][1]
    expected = (M1 * L1 * M2 * L2 * M3 + M2 * L2 * M3 * d11 + L1 * M2 * M3 * d21
                + M1 * L1 * M3 * d22 + M3 * (d11 * d22))
    example = transposition_expand(d, [3, 1, 4, 2, 5]) == expected
    results = verify_transposition(50, seed=6)
    passed = sum(r.holds for r in results)
    ok = example and passed == 50
    record(6, ok, f"sigma=(31425) example reproduced: {example}; random {passed}/50")
    assert ok


def test_criterion_07_moyal():
    t = time.perf_counter()
    results = verify_moyal(1, 4, 50, seed=71) + verify_moyal(2, 4, 50, seed=72)
    elapsed = time.perf_counter() - t
    passed = sum(r.holds for r in results)
    ok = passed == len(results) and elapsed < 60
    record(7, ok, f"n=1,2 deg<=4: {passed}/{len(results)} exact ({elapsed:.1f} s)")
    assert ok


def _conformance(rel, trials, seed, affine_h, f_deg, h_deg=2):
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        if affine_h:
            H = randgen.affine(rng, rel.generators)
        else:
            H = randgen.cpoly(rng, rel.generators, h_deg)
        F = randgen.cpoly(rng, rel.generators, f_deg)
        passed += bracket_correspondence(H, F, rel).equal
    return passed


def test_criterion_08_poisson_conformance():
    counts = {
        "constant (canonical 2D, deg H<=2, deg F<=5)": _conformance(canonical_system(2), 100, 81,
                                                                     False, 5),
        "so(3) (affine H, deg F<=4)": _conformance(preset("so3"), 100, 82, True, 4),
        "heisenberg (affine H, deg F<=4)": _conformance(preset("heisenberg"), 100, 83, True, 4),
    }
    ok = all(v == 100 for v in counts.values())
    record(8, ok, "; ".join(f"{k}: {v}/100" for k, v in counts.items()))
    assert ok


def test_criterion_09_counterexample(capsys):
    code, report = cli_json(capsys, "counterexample", "--case", "constant")
    disc = report["results"][0]["discrepancy"]
    ok = code == 0 and disc == "-3/2" and report["results"][0]["equal"] is False
    record(9, ok, f"(p^3, x^3) in canonical 1D: discrepancy {disc}")
    assert ok


def test_criterion_10_general_case():
    rel = preset("general")
    passed = _conformance(rel, 50, 10, True, 4)
    ok = passed == 50 and len(rel.generators) == 2 and len(rel.letters) == 3
    record(10, ok, f"B=(u,v) in T=(u,v,w), {{u,v}} = w + u: {passed}/50 affine-H trials exact")
    assert ok


def test_criterion_11_end_to_end():
    C2 = canonical_system(2)
    t = time.perf_counter()
    rep = quantize_check(C2, [parse_expr("(1/2)*(p1^2+p2^2+x1^2+x2^2)", C2)],
                         [parse_expr("x1 p2 - x2 p1", C2)])
    t_osc = time.perf_counter() - t
    so3 = preset("so3")
    t = time.perf_counter()
    cas = casimir_quantization(parse_expr("L1^2+L2^2+L3^2", so3), so3)
    t_cas = time.perf_counter() - t
    osc_ok = rep.all_leibniz_zero and rep.all_commutators_zero and t_osc < 5
    cas_ok = cas.is_casimir and cas.commutes_with_all and t_cas < 5
    ok = osc_ok and cas_ok
    record(11, ok, f"oscillator set commuting: {osc_ok} ({t_osc:.2f} s); "
                   f"so(3) Casimir positive: {cas_ok} ({t_cas:.2f} s)")
    assert ok


def test_criterion_12_structural_invariants():
    rng = random.Random(12)
    checks = {name: 0 for name in ("abelianize(symmetrize(P)) = P", "sym_k permutation invariance",
                                   "NF idempotent", "NF quotient homomorphism",
                                   "Leibniz rule", "Jacobi")}
    systems = [canonical_system(1), canonical_system(2), preset("so3"), preset("heisenberg")]
    gens = ("a", "b", "c")
    for t in range(100):
        rel = systems[t % len(systems)]
        P = randgen.cpoly(rng, gens, 5, 4)
        checks["abelianize(symmetrize(P)) = P"] += abelianize(symmetrize(P)) == P

        args = [randgen.ncpoly(rng, gens, 2, 2) for _ in range(rng.randint(2, 4))]
        perm = list(args)
        rng.shuffle(perm)
        checks["sym_k permutation invariance"] += sym_k(*args) == sym_k(*perm)

        a = randgen.ncpoly(rng, rel.generators, 4)
        b = randgen.ncpoly(rng, rel.generators, 4)
        na, nb = normal_form(a, rel), normal_form(b, rel)
        checks["NF idempotent"] += normal_form(na, rel) == na
        checks["NF quotient homomorphism"] += (normal_form(a * b, rel) == normal_form(na * nb, rel)
                                               and normal_form(a + b, rel) == na + nb)

        H, F, G = (randgen.cpoly(rng, rel.generators, 3) for _ in range(3))
        br = lambda x, y: leibniz_bracket(x, y, rel)  # noqa: E731
        checks["Leibniz rule"] += br(H, F * G) == br(H, F) * G + F * br(H, G)
        checks["Jacobi"] += (br(H, br(F, G)) + br(F, br(G, H)) + br(G, br(H, F))).is_zero()
    ok = all(v == 100 for v in checks.values())
    record(12, ok, "; ".join(f"{k}: {v}/100" for k, v in checks.items()))
    assert ok


if __name__ == "__main__":
    import pytest
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
