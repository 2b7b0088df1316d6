"""Algebra-definition and integrable-set files, plus built-in presets."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .coeffs import ONE, Coeff, CoeffPoly, format_scalar
from .cpoly import CPoly
from .errors import ParseError, RelationError
from .relations import Case, RelationSystem, canonical_system
from .parsing import parse_coeff, parse_expr

PRESETS = ("canonical:<n>", "so3", "heisenberg", "general")


def _coeff_text(c: Coeff) -> str:
    return str(c) if isinstance(c, CoeffPoly) else format_scalar(c)


def system_from_dict(data: dict[str, Any]) -> RelationSystem:
    try:
        name = data.get("name", "algebra")
        case = Case(data["case"])
        gens = tuple(data["generators"])
        ext = tuple(data.get("extended_generators", ()))
        params = tuple(data.get("central_params", ()))
        entries = data.get("brackets", [])
    except KeyError as e:
        raise RelationError(f"algebra definition is missing field {e.args[0]!r}") from None
    except ValueError as e:
        raise RelationError(str(e)) from None
    letters = gens + ext
    brackets: dict[tuple[int, int], dict] = {}
    for entry in entries:
        try:
            i, j = gens.index(entry["i"]), gens.index(entry["j"])
        except ValueError:
            raise RelationError(f"bracket {entry.get('i')!r},{entry.get('j')!r} "
                                f"names a letter outside the generators {gens}") from None
        if i == j:
            raise RelationError(f"bracket of {entry['i']!r} with itself must not be listed")
        sign = ONE if i < j else -ONE
        key = (min(i, j), max(i, j))
        if key in brackets:
            raise RelationError(f"bracket pair {entry['i']!r},{entry['j']!r} listed twice")
        value: dict = {}
        for t in entry.get("terms", []):
            c = parse_coeff(str(t.get("coeff", "1")), params)
            target = t.get("target")
            if case is Case.CONSTANT:
                if target is not None:
                    c = c * parse_coeff(str(target), params)
                w = ()
            else:
                if target not in letters:
                    raise RelationError(f"bracket target {target!r} is not a known letter")
                w = (letters.index(target),)
            value[w] = value.get(w, 0) + sign * c
        brackets[key] = {w: c for w, c in value.items() if c}
    return RelationSystem(name, case, gens, brackets, ext, params)


def system_to_dict(rel: RelationSystem) -> dict[str, Any]:
    entries = []
    for (i, j), value in sorted(rel.brackets.items()):
        terms = []
        for w, c in sorted(value.items()):
            term = {"coeff": _coeff_text(c)}
            if w:
                term["target"] = rel.letters[w[0]]
            terms.append(term)
        entries.append({"i": rel.generators[i], "j": rel.generators[j], "terms": terms})
    return {"name": rel.name, "case": rel.case.value, "generators": list(rel.generators),
            "extended_generators": list(rel.extended_generators),
            "central_params": list(rel.central_params), "brackets": entries}


def load_system(path: str | Path) -> RelationSystem:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: {e.msg}", e.doc, e.pos) from None
    return system_from_dict(data)


def dump_system(rel: RelationSystem, path: str | Path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(system_to_dict(rel), fh, indent=2)
        fh.write("\n")


def so3_system() -> RelationSystem:
    """so(3) with {L1,L2} = L3 and cyclic."""
    return system_from_dict({
        "name": "so3", "case": "linear", "generators": ["L1", "L2", "L3"],
        "brackets": [
            {"i": "L1", "j": "L2", "terms": [{"target": "L3", "coeff": "1"}]},
            {"i": "L2", "j": "L3", "terms": [{"target": "L1", "coeff": "1"}]},
            {"i": "L3", "j": "L1", "terms": [{"target": "L2", "coeff": "1"}]},
        ]})


def heisenberg_system() -> RelationSystem:
    """Two-step nilpotent algebra: {X,Y} = Z with Z central."""
    return system_from_dict({
        "name": "heisenberg", "case": "linear", "generators": ["X", "Y", "Z"],
        "brackets": [{"i": "X", "j": "Y", "terms": [{"target": "Z", "coeff": "1"}]}]})


def general_system() -> RelationSystem:
    """B = (u, v) inside T = (u, v, w) with {u, v} = w + u.

    ``w`` plays the role of a closure letter such as ``u*v`` whose brackets
    with B are not part of the data.
    """
    return system_from_dict({
        "name": "general", "case": "general", "generators": ["u", "v"],
        "extended_generators": ["w"],
        "brackets": [{"i": "u", "j": "v", "terms": [{"target": "w", "coeff": "1"},
                                                   {"target": "u", "coeff": "1"}]}]})


def preset(name: str) -> RelationSystem:
    kind, _, arg = name.partition(":")
    if kind == "canonical":
        try:
            n = int(arg or "1")
        except ValueError:
            raise RelationError(f"bad preset {name!r}; expected canonical:<n>") from None
        return canonical_system(n)
    table = {"so3": so3_system, "heisenberg": heisenberg_system, "general": general_system}
    if kind in table and not arg:
        return table[kind]()
    raise RelationError(f"unknown preset {name!r}; available: {', '.join(PRESETS)}")


def resolve_system(ref: str, base: Path | None = None) -> RelationSystem:
    """Load ``preset:<name>`` or a file path (relative to ``base`` if given)."""
    if ref.startswith("preset:"):
        return preset(ref[len("preset:"):])
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = base / path
    return load_system(path)


@dataclass
class IntegrableSet:
    system: RelationSystem
    centrals: list[CPoly]
    others: list[CPoly]
    sources: dict[str, list[str]]


def load_set(path: str | Path, system: RelationSystem | None = None) -> IntegrableSet:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: {e.msg}", e.doc, e.pos) from None
    if not isinstance(data, dict) or not isinstance(data.get("centrals"), list) \
            or not isinstance(data.get("others", []), list):
        raise RelationError("set file needs a 'centrals' list and an optional 'others' list")
    if system is None:
        if "algebra" not in data:
            raise RelationError("set file names no algebra and none was given")
        system = resolve_system(data["algebra"], path.parent)
    centrals = [parse_expr(s, system) for s in data["centrals"]]
    others = [parse_expr(s, system) for s in data.get("others", [])]
    return IntegrableSet(system, centrals, others,
                         {"centrals": list(data["centrals"]), "others": list(data.get("others", []))})
