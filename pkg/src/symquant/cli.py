"""Command-line interface: ``symquant <command> ...``.

Exit codes: 0 success, 1 a verification failed or a report is negative,
2 bad input. With ``--json`` the report goes to stdout as one JSON object
with fields ``command, inputs, results, verdict, seed``; input errors are
written to stderr as JSON too.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import identities
from .algebra_io import load_set, load_system, preset
from .coeffs import format_scalar
from .errors import SymQuantError
from .parsing import parse_expr
from .poisson import leibniz_bracket
from .relations import RelationSystem, canonical_system, normal_form, validate_relations
from .symmetrization import (bracket_correspondence, casimir_quantization, quantize_check,
                             symmetrize)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(SymQuantError):
    """Command-line usage problem."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _system(args) -> RelationSystem:
    path = getattr(args, "file", None) or args.algebra
    if path and args.preset:
        raise InputError("give either an algebra file or --preset, not both")
    if args.preset:
        return preset(args.preset)
    if path:
        return load_system(path)
    raise InputError("no algebra given; use -a FILE or --preset NAME")


def _algebra_label(args) -> str:
    return f"preset:{args.preset}" if args.preset else str(getattr(args, "file", None) or args.algebra)


def _report(command: str, inputs: dict, results: list, verdict: str, seed=None) -> dict:
    return {"command": command, "inputs": inputs, "results": results, "verdict": verdict,
            "seed": seed}


# -- subcommands -------------------------------------------------------------
# Each returns (report, exit code, text lines).

def cmd_validate(args):
    rel = _system(args)
    rep = validate_relations(rel)
    lines = [f"{rel.name} ({rel.case.value}): {'valid' if rep.valid else 'INVALID'}"]
    for v in rep.violations:
        lines.append(f"  Jacobi sum ({v['i']},{v['j']},{v['h']} -> {v['m']}) = {v['sum']}")
    report = _report("validate", {"algebra": _algebra_label(args)}, [rep.to_dict()],
                     "valid" if rep.valid else "invalid")
    return report, EXIT_OK if rep.valid else EXIT_FAIL, lines


def cmd_symmetrize(args):
    rel = _system(args)
    P = parse_expr(args.expr, rel)
    out = symmetrize(P)
    if args.normal_form:
        out = normal_form(out, rel)
    result = {"input": str(P), "symmetrized": str(out), "normal_form": args.normal_form}
    report = _report("symmetrize", {"algebra": _algebra_label(args), "expr": args.expr},
                     [result], "ok")
    return report, EXIT_OK, [str(out)]


def cmd_bracket(args):
    rel = _system(args)
    H, F = parse_expr(args.h, rel), parse_expr(args.f, rel)
    G = leibniz_bracket(H, F, rel)
    report = _report("bracket", {"algebra": _algebra_label(args), "h": args.h, "f": args.f},
                     [{"leibniz_bracket": str(G)}], "ok")
    return report, EXIT_OK, [f"{{H, F}}_N = {G}"]


def cmd_correspond(args):
    rel = _system(args)
    H, F = parse_expr(args.h, rel), parse_expr(args.f, rel)
    res = bracket_correspondence(H, F, rel)
    lines = [f"{{H, F}}_N      = {res.leibniz}",
             f"[H^sym, F^sym] = {res.lhs}",
             f"{{H, F}}_N^sym  = {res.rhs}",
             f"equal = {str(res.equal).lower()}",
             f"discrepancy = {res.discrepancy}"]
    if not res.hypothesis_holds:
        lines.append("note: deg H exceeds the bound under which equality is guaranteed")
    report = _report("correspond", {"algebra": _algebra_label(args), "h": args.h, "f": args.f},
                     [res.to_dict()], "equal" if res.equal else "not-equal")
    return report, EXIT_OK if res.equal else EXIT_FAIL, lines


def cmd_quantize_check(args):
    given = _system(args) if (args.algebra or args.preset) else None
    fam = load_set(args.set, given)
    rep = quantize_check(fam.system, fam.centrals, fam.others, args.assume_poly_independent)
    names = [f"P{i + 1}" for i in range(rep.s)]
    lines = [f"{fam.system.name}: r = {rep.r} central, s = {rep.s} total, degrees {rep.degrees}"]
    for pr in rep.pairs:
        flag = " DEFECT" if (pr.i, pr.j) in rep.defects else ""
        lines.append(f"  ({names[pr.i]}, {names[pr.j]}): bracket zero = "
                     f"{str(pr.leibniz_zero).lower()}, commutator zero = "
                     f"{str(pr.commutator_zero).lower()}{flag}")
        if not pr.commutator_zero:
            lines.append(f"    commutator = {pr.discrepancy}")
    lines.append(f"conditions: a = {rep.condition_a}, b = {rep.condition_b}, "
                 f"b (literal j >= 2) = {rep.condition_b_literal}")
    lines.append(f"verdict: {rep.verdict}")
    lines.append(rep.claim())
    inputs = {"set": str(args.set), "algebra": fam.system.name, **fam.sources,
              "assume_poly_independent": args.assume_poly_independent}
    report = _report("quantize-check", inputs, [rep.to_dict()], rep.verdict)
    ok = rep.all_commutators_zero
    return report, EXIT_OK if ok else EXIT_FAIL, lines


def cmd_casimir(args):
    rel = _system(args)
    C = parse_expr(args.expr, rel)
    res = casimir_quantization(C, rel, trials=args.trials, seed=args.seed)
    lines = [f"is_casimir = {str(res.is_casimir).lower()}",
             f"commutes_with_all = {str(res.commutes_with_all).lower()}"]
    for label, w in res.witnesses:
        lines.append(f"  [C^sym, {label}] = {w}")
    ok = res.is_casimir and res.commutes_with_all
    report = _report("casimir", {"algebra": _algebra_label(args), "expr": args.expr},
                     [res.to_dict()], "casimir" if ok else "not-casimir", args.seed)
    return report, EXIT_OK if ok else EXIT_FAIL, lines


def cmd_counterexample(args):
    rel = canonical_system(1)
    H, F = parse_expr("p^3", rel), parse_expr("x^3", rel)
    res = bracket_correspondence(H, F, rel)
    found = not res.equal
    lines = ["H = p^3, F = x^3 in canonical 1D (deg H = 3)",
             f"{{H, F}}_N = {res.leibniz}",
             f"equal = {str(res.equal).lower()}",
             f"discrepancy = {res.discrepancy}"]
    report = _report("counterexample", {"case": args.case, "h": "p^3", "f": "x^3"},
                     [res.to_dict()], "witness" if found else "no-witness")
    return report, EXIT_OK if found else EXIT_FAIL, lines


def _verify_results(args) -> tuple[list[dict], bool, list[str], int | None]:
    ident = args.identity
    if ident == "bernoulli":
        rows = identities.verify_bernoulli(args.hmax)
        results = [{"h": r["h"], "c": format_scalar(r["c"]),
                    "bernoulli_ratio": format_scalar(r["bernoulli_ratio"]),
                    "agrees": r["agrees"]} for r in rows]
        lines = [f"c_{r['h']} = {r['c']}" + ("" if r["agrees"] else "  (disagrees with B_2h/(2h)!)")
                 for r in results]
        return results, all(r["agrees"] for r in rows), lines, None
    seed = None
    if ident in ("pc1", "lemma1", "pc2", "cyclic"):
        fn = {"pc1": identities.verify_pc1, "lemma1": identities.verify_lemma1,
              "pc2": identities.verify_pc2, "cyclic": identities.verify_cyclic_residuals}[ident]
        res = [fn(args.k)]
    elif ident == "distr":
        res = [identities.verify_distr()]
    elif ident == "wick":
        seed = args.seed
        res = identities.verify_wick(args.l, args.m, args.trials, args.seed)
    elif ident == "transp":
        seed = args.seed
        res = identities.verify_transposition(args.trials, args.seed)
    else:
        seed = args.seed
        res = identities.verify_moyal(args.n, args.deg, args.trials, args.seed)
    lines = [f"{r.name} (k={r.k}): {'holds' if r.holds else 'FAILS'}"
             + ("" if r.holds else f", residual has {len(r.residual.terms)} terms") for r in res]
    return [r.to_dict() for r in res], all(r.holds for r in res), lines, seed


def cmd_verify(args):
    results, ok, lines, seed = _verify_results(args)
    inputs = {k: v for k, v in vars(args).items()
              if k in ("identity", "k", "l", "m", "n", "deg", "trials", "hmax") and v is not None}
    report = _report(f"verify {args.identity}", inputs, results, "holds" if ok else "fails", seed)
    return report, EXIT_OK if ok else EXIT_FAIL, lines


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    alg = _ArgumentParser(add_help=False)
    alg.add_argument("-a", "--algebra", help="algebra definition file (JSON)")
    alg.add_argument("--preset", help="built-in algebra: canonical:<n>, so3, heisenberg, general")

    parser = _ArgumentParser(
        prog="symquant",
        description="Symmetrization quantization of polynomial Poisson algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common, alg], help="check a relation system")
    p.add_argument("file", nargs="?", help="algebra definition file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("symmetrize", parents=[common, alg], help="symmetrize a polynomial")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("--normal-form", action="store_true", help="reduce modulo the relations")
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("bracket", parents=[common, alg], help="Leibniz bracket {H, F}_N")
    p.add_argument("--h", required=True)
    p.add_argument("--f", required=True)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("correspond", parents=[common, alg],
                       help="compare [H^sym, F^sym] with the symmetrized bracket")
    p.add_argument("--h", required=True)
    p.add_argument("--f", required=True)
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser("quantize-check", parents=[common, alg],
                       help="commutation check for a set of polynomials")
    p.add_argument("--set", required=True, type=Path, help="set file (JSON)")
    p.add_argument("--assume-poly-independent", action="store_true",
                   help="assert that the generators are polynomially independent")
    p.set_defaults(func=cmd_quantize_check)

    p = sub.add_parser("casimir", parents=[common, alg], help="Casimir quantization check")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("--trials", type=int, default=5, help="random polynomials to test against")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("verify", help="run an identity check")
    vsub = p.add_subparsers(dest="identity", required=True)
    for name in ("pc1", "lemma1", "pc2", "cyclic"):
        q = vsub.add_parser(name, parents=[common])
        q.add_argument("--k", type=int, required=True)
    vsub.add_parser("distr", parents=[common])
    q = vsub.add_parser("bernoulli", parents=[common])
    q.add_argument("--hmax", type=int, default=5)
    q = vsub.add_parser("wick", parents=[common])
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--trials", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    q = vsub.add_parser("transp", parents=[common])
    q.add_argument("--trials", type=int, default=50)
    q.add_argument("--seed", type=int, default=0)
    q = vsub.add_parser("moyal", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--deg", type=int, default=4)
    q.add_argument("--trials", type=int, default=50)
    q.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", parents=[common],
                       help="show a degree-3 pair where the correspondence fails")
    p.add_argument("--case", choices=["constant"], default="constant")
    p.set_defaults(func=cmd_counterexample)
    return parser


def _error_payload(exc: BaseException) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    for attr in ("line", "column"):
        if hasattr(exc, attr):
            err[attr] = getattr(exc, attr)
    return {"error": err}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        report, code, lines = args.func(args)
    except (SymQuantError, OSError, ValueError) as exc:
        if as_json:
            print(json.dumps(_error_payload(exc)), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
