import math
from fractions import Fraction

import pytest

from tracemaps.fibfamily import (
    FibParams,
    approximant_length,
    closed_form_map,
    closed_form_step,
    closed_form_transformation,
    fib_numbers,
    integer_eigenvalue_condition,
    invariant_H,
    invariant_H_pm,
    invariant_H_tilde,
    known_invariant,
)
from tracemaps.poly import X, Y, Z, chebyshev_u, parse
from tracemaps.tracemap import check_invariant, derive, fricke, transformation_polynomial
from tracemaps.words import FIBONACCI, gen_fibonacci

GRID = [(k, l) for k in range(-3, 4) for l in range(-3, 4)]


@pytest.mark.parametrize("k, l", GRID)
def test_closed_form_matches_derivation(k, l):
    p = FibParams(k, l)
    assert closed_form_map(p) == derive(gen_fibonacci(k, l))
    assert closed_form_transformation(p) == transformation_polynomial(gen_fibonacci(k, l))


@pytest.mark.parametrize("k, l", [(2, 1), (1, 2), (-1, 3), (3, -2)])
def test_numeric_step(k, l):
    F = closed_form_map(FibParams(k, l))
    pt = (Fraction(1, 3), Fraction(-2, 5), Fraction(3, 7))
    assert closed_form_step(k, l, *pt, Fraction(1)) == F(*pt)


def test_transformation_21():
    assert closed_form_transformation(FibParams(2, 1)) == 4 * X * X


@pytest.mark.parametrize("k, l, m", [(2, 1, 1), (1, 1, None), (6, 1, 2), (0, 3, 0), (2, -1, -1), (12, 1, 3)])
def test_integer_eigenvalue_condition(k, l, m):
    assert integer_eigenvalue_condition(FibParams(k, l)) == m
    if m is not None:
        assert k == m * l + m * m


def test_integer_eigenvalue_condition_exhaustive():
    for k in range(-20, 21):
        for l in range(-10, 11):
            m = integer_eigenvalue_condition(FibParams(k, l))
            sols = [m_ for m_ in range(-40, 41) if m_ * l + m_ * m_ == k]
            if not sols:
                assert m is None
            else:
                assert m in sols
                assert abs(m) == min(abs(s) for s in sols)


def test_H_examples():
    assert invariant_H(1) == (4 * X * X - 1) * Y - 2 * X * Z
    assert invariant_H(0) == 2 * X * Y - Z
    assert invariant_H_tilde(2) == 2 * X * Y - Z


@pytest.mark.parametrize("l", range(0, 6))
def test_family_invariants(l):
    assert check_invariant(closed_form_map(FibParams(l + 1, l)), invariant_H(l))
    assert check_invariant(closed_form_map(FibParams(1 - l, l)), invariant_H_tilde(l))
    assert invariant_H_pm(l, 1) == invariant_H(l)
    # the minus branch at l is the tilde form for k = 1 - l
    assert check_invariant(closed_form_map(FibParams(1 - l, l)), invariant_H_pm(l, -1))


def test_H_not_invariant_elsewhere():
    assert not check_invariant(derive(FIBONACCI), invariant_H(1))
    # degree one in z, so independent of the Fricke character
    assert invariant_H(3).degree("z") == 1 and fricke().degree("z") == 2


def test_known_invariant():
    assert known_invariant(2, 1) == "H"
    assert known_invariant(-1, 2) == "H~"
    assert known_invariant(1, 1) is None


def test_fib_numbers():
    assert [fib_numbers(2, n) for n in range(6)] == [0, 1, 2, 5, 12, 29]
    assert [approximant_length(2, n) for n in range(1, 6)] == [1, 3, 7, 17, 41]
    for l in (1, 2, 3):
        for n in range(20):
            assert math.gcd(fib_numbers(l, n), fib_numbers(l, n + 1)) == 1


def test_approximant_length_is_word_length():
    from tracemaps.words import apply, parse_word, power

    for k, l in [(1, 1), (1, 2), (2, 1), (1, 3)]:
        for n in range(1, 6):
            w = apply(power(gen_fibonacci(k, l), n), parse_word("a"))
            assert len(w) == approximant_length(l, n, k)


def test_chebyshev_is_used_backwards():
    # k = -1 uses U_{-2} = -1, U_{-3} = -2x
    F = closed_form_map(FibParams(-1, 1))
    assert F == derive(gen_fibonacci(-1, 1))
    assert chebyshev_u(-3, "x") == parse("-2*x")
