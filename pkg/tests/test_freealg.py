import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from strategies import ncpolys, scalars
from symquant import randgen
from symquant.coeffs import format_scalar, parse_scalar
from symquant.cpoly import CPoly
from symquant.errors import CapExceededError, ContextMismatchError
from symquant.freealg import (DEGREE_CAP, SYM_CAP, NCPoly, abelianize, commutator, diamond, mul,
                              multiset_permutations, sym_k, sym_word)

GENS = ("B1", "B2", "B3")
B1, B2, B3 = NCPoly.generators(GENS)


def W(*letters, c=1):
    return NCPoly.word(letters, GENS, Fraction(c))


def test_product_is_concatenation():
    assert B1 * B2 == W(0, 1)


def test_product_expands_bilinearly():
    got = (B1 + B2) * (B1 - B2)
    assert got == W(0, 0) - W(0, 1) + W(1, 0) - W(1, 1)


def test_identity_is_neutral():
    a = randgen.ncpoly(random.Random(3), GENS, 3)
    one = NCPoly.one(GENS)
    assert a * one == a and one * a == a


def test_zero_coefficients_are_dropped():
    p = B1 + B2 - B1
    assert p.terms == {(1,): 1}
    assert (B1 - B1).is_zero()


def test_scalar_multiplication_and_constants():
    assert (B1 * Fraction(1, 2)) * 2 == B1
    assert B1 + 1 == B1 + NCPoly.one(GENS)


def test_context_mismatch_is_refused():
    other = NCPoly.gen(0, ("x", "p"))
    with pytest.raises(ContextMismatchError):
        B1 + other
    with pytest.raises(ContextMismatchError):
        B1 * other


def test_degree_cap_on_product():
    a = W(*([0] * 7))
    with pytest.raises(CapExceededError):
        mul(a, a)
    assert mul(a, a, degree_cap=14).degree() == 14
    assert DEGREE_CAP == 12


def test_commutator_examples():
    assert commutator(B1, B1).is_zero()
    assert commutator(B1, B2) == W(0, 1) - W(1, 0)


def test_sym_k_examples():
    assert sym_k(B1, B2) == (W(0, 1) + W(1, 0)) * Fraction(1, 2)
    assert sym_k(B1) == B1
    assert sym_k(B1, B1, B2) == (W(0, 0, 1) + W(0, 1, 0) + W(1, 0, 0)) * Fraction(1, 3)


def test_sym_k_matches_naive_average():
    rng = random.Random(11)
    args = [randgen.ncpoly(rng, GENS, 2, 2) for _ in range(4)]
    naive = NCPoly.zero(GENS)
    for perm in itertools.permutations(args):
        prod = NCPoly.one(GENS)
        for a in perm:
            prod = prod * a
        naive = naive + prod
    assert sym_k(*args) == naive * Fraction(1, 24)


def test_sym_k_cap_is_refused():
    with pytest.raises(CapExceededError):
        sym_k(*([B1] * (SYM_CAP + 1)))
    with pytest.raises(CapExceededError):
        sym_word([0] * (SYM_CAP + 1), GENS)


def test_sym_word_agrees_with_sym_k():
    for letters in ([0, 0, 1], [2, 0, 1, 0], [1, 1, 1]):
        assert sym_word(letters, GENS) == sym_k(*(NCPoly.gen(i, GENS) for i in letters))


def test_multiset_permutations_count():
    perms = list(multiset_permutations([2, 1, 1]))
    assert len(perms) == 12
    assert len({tuple(p) for p in perms}) == 12


def test_diamond_is_commutative_but_not_associative():
    assert (diamond(B1, B2) - diamond(B2, B1)).is_zero()
    assert not (diamond(B1, diamond(B2, B3)) - diamond(diamond(B1, B2), B3)).is_zero()


def test_diamond_distr_identity():
    A = NCPoly.gen(2, GENS)
    lhs = diamond(B1, diamond(B2, A)) - diamond(B2, diamond(B1, A))
    assert lhs == commutator(commutator(B1, B2), A) * Fraction(1, 4)


def test_abelianize_examples():
    assert abelianize(W(0, 1) - W(1, 0)).is_zero()
    assert abelianize(sym_k(B1, B1, B2)) == CPoly.monomial([0, 0, 1], GENS)
    a, b = Fraction(2), Fraction(-1, 3)
    assert abelianize(W(0, 1, c=a) + W(1, 0, c=b)) == CPoly.monomial([0, 1], GENS, a + b)


def test_printing_is_deterministic():
    p = W(1, 0) + W(0, 0, 1, c=Fraction(3, 2)) - 2
    assert str(p) == "-2 + B2*B1 + 3/2*B1^2*B2"
    assert str(NCPoly.zero(GENS)) == "0"


@given(scalars)
def test_scalar_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


@settings(max_examples=40, deadline=None)
@given(ncpolys(GENS), ncpolys(GENS), ncpolys(GENS))
def test_commutator_jacobi(a, b, c):
    total = (commutator(commutator(a, b), c) + commutator(commutator(c, a), b)
             + commutator(commutator(b, c), a))
    assert total.is_zero()


@settings(max_examples=40, deadline=None)
@given(ncpolys(GENS), ncpolys(GENS), scalars)
def test_commutator_bilinear_antisymmetric(a, b, s):
    assert commutator(a, b) == -commutator(b, a)
    assert commutator(a * s + b, b) == commutator(a, b) * s


@settings(max_examples=40, deadline=None)
@given(ncpolys(GENS, 2), ncpolys(GENS, 2))
def test_abelianize_is_ring_homomorphism(a, b):
    assert abelianize(a * b) == abelianize(a) * abelianize(b)
    assert abelianize(a + b) == abelianize(a) + abelianize(b)


def test_sym_k_permutation_invariance_all_orders():
    rng = random.Random(5)
    for k in range(2, 5):
        args = [randgen.ncpoly(rng, GENS, 2, 2) for _ in range(k)]
        ref = sym_k(*args)
        for perm in itertools.permutations(args):
            assert sym_k(*perm) == ref


def test_sym_k_random_transpositions_up_to_six():
    rng = random.Random(6)
    for k in (5, 6):
        args = [randgen.ncpoly(rng, GENS, 1, 2) for _ in range(k)]
        ref = sym_k(*args)
        for _ in range(3):
            i, j = rng.sample(range(k), 2)
            swapped = list(args)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            assert sym_k(*swapped) == ref


@settings(max_examples=20, deadline=None)
@given(ncpolys(GENS, 2, 2))
def test_sym_k_of_equal_arguments_is_power(a):
    assert sym_k(a, a, a) == a ** 3


@settings(max_examples=20, deadline=None)
@given(ncpolys(GENS, 2), ncpolys(GENS, 2), ncpolys(GENS, 1), scalars)
def test_sym_k_multilinear(x, y, z, s):
    assert sym_k(x * s + y, z, z) == sym_k(x, z, z) * s + sym_k(y, z, z)
