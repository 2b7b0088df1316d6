"""Seeded random instances for property checks and verification trials.

Coefficients are drawn from the small pool {-3..3}/{1,2} (zero excluded) so
that exact arithmetic stays cheap and every run is reproducible from its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .coeffs import CoeffPoly
from .cpoly import CPoly
from .freealg import NCPoly

POOL = sorted({Fraction(n, d) for n in range(-3, 4) for d in (1, 2) if n})


def scalar(rng: random.Random) -> Fraction:
    return rng.choice(POOL)


def coeff(rng: random.Random, params: Sequence[str] = (), max_deg: int = 1):
    """A random coefficient; a small polynomial in the parameters when any are given."""
    if not params:
        return scalar(rng)
    params = tuple(params)
    terms = {}
    for _ in range(rng.randint(1, 2)):
        e = [0] * len(params)
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(len(params))] += 1
        terms[tuple(e)] = scalar(rng)
    return CoeffPoly.make(terms, params)


def cpoly(rng: random.Random, gens: Sequence[str], max_deg: int, nterms: int = 3,
          params: Sequence[str] = (), min_deg: int = 0) -> CPoly:
    gens = tuple(gens)
    terms = {}
    for _ in range(nterms):
        deg = rng.randint(min_deg, max_deg)
        e = [0] * len(gens)
        for _ in range(deg):
            e[rng.randrange(len(gens))] += 1
        terms[tuple(e)] = coeff(rng, params)
    return CPoly(terms, gens)


def affine(rng: random.Random, gens: Sequence[str], params: Sequence[str] = ()) -> CPoly:
    gens = tuple(gens)
    terms = {(0,) * len(gens): coeff(rng, params)}
    for i in range(len(gens)):
        if rng.random() < 0.7:
            e = [0] * len(gens)
            e[i] = 1
            terms[tuple(e)] = coeff(rng, params)
    return CPoly(terms, gens)


def ncpoly(rng: random.Random, gens: Sequence[str], max_deg: int, nterms: int = 3,
           params: Sequence[str] = ()) -> NCPoly:
    gens = tuple(gens)
    terms = {}
    for _ in range(nterms):
        w = tuple(rng.randrange(len(gens)) for _ in range(rng.randint(0, max_deg)))
        terms[w] = coeff(rng, params)
    return NCPoly(terms, gens)


def matrix(rng: random.Random, rows: int, cols: int) -> list[list[Fraction]]:
    return [[scalar(rng) for _ in range(cols)] for _ in range(rows)]
