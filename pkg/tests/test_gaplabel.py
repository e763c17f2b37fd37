import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import positive_substitutions
from tracemaps.errors import DegenerateD, InverseLettersUnsupported
from tracemaps.gaplabel import (
    charpoly,
    frequency_module,
    idos_to_label,
    induced_two_letter,
    label_to_idos,
    m1,
    m2,
    m2_eigenvalues,
    mat_vec,
    module_contains,
    perron_data,
    times_k_over_lambda,
)
from tracemaps.quadfield import QuadExact
from tracemaps.words import FIBONACCI, IDENTITY, gen_fibonacci, parse_rule, substitution_matrix, transpose

NONSQUARE = [(1, 1), (1, 2), (1, 3), (2, 3), (3, 2), (1, 4)]


def test_induced_fibonacci():
    ind = induced_two_letter(FIBONACCI)
    assert ind["ba"] == ("ba", "ab")


@pytest.mark.parametrize("k, l", [(1, 2), (2, 3), (3, 1), (2, 2)])
def test_induced_general(k, l):
    ind = induced_two_letter(gen_fibonacci(k, l))
    assert ind["ba"] == ("bb",) * (l - 1) + ("ba",) + ("aa",) * (k - 1) + ("ab",)


def test_induced_identity():
    assert induced_two_letter(IDENTITY) == {p: (p,) for p in ("aa", "ab", "ba", "bb")}


def test_inverse_letters_rejected():
    with pytest.raises(InverseLettersUnsupported):
        m1(parse_rule("a->b;b->bA"))


@pytest.mark.parametrize("k, l", [(1, 1), (1, 2), (2, 3), (3, 1), (2, 2)])
def test_matrices(k, l):
    rho = gen_fibonacci(k, l)
    assert m1(rho) == [[0, k], [1, l]]
    assert m2(rho) == [[0, 0, k - 1, k - 1], [0, 0, 1, 1], [0, 0, 1, 1], [1, 1, l - 1, l - 1]]


@given(positive_substitutions)
def test_m1_is_transpose(rho):
    assert tuple(map(tuple, m1(rho))) == transpose(substitution_matrix(rho))


def test_charpoly_small():
    assert charpoly([[0, 1], [1, 1]]) == [1, -1, -1]
    assert charpoly([[2]]) == [1, -2]


@pytest.mark.parametrize("k, l", NONSQUARE + [(2, 1)])
def test_m2_eigenvalues(k, l):
    ev = m2_eigenvalues(k, l)
    lam = QuadExact.lam(k, l)
    assert ev[:2] == [0, 0] and ev[2] == lam and ev[3] == l - lam


@pytest.mark.parametrize("k, l", NONSQUARE + [(2, 1), (6, 1)])
def test_perron_vectors(k, l):
    pd = perron_data(k, l)
    rho = gen_fibonacci(k, l)
    assert mat_vec(m1(rho), pd.v1) == tuple(pd.lam * v for v in pd.v1)
    assert mat_vec(m2(rho), pd.v2) == tuple(pd.lam * v for v in pd.v2)
    assert sum(pd.v1, QuadExact(0, 0, k, l)) == 1
    assert sum(pd.v2, QuadExact(0, 0, k, l)) == 1
    # pair frequencies marginalise to letter frequencies
    assert pd.v1[0] == pd.v2[0] + pd.v2[1]
    assert pd.v1[1] == pd.v2[2] + pd.v2[3]


def test_perron_values():
    v = perron_data(1, 1).v1
    assert abs(float(v[0]) - 0.3819660113) < 1e-9 and abs(float(v[1]) - 0.6180339887) < 1e-9
    v = perron_data(1, 2).v1
    assert abs(float(v[0]) - 0.2928932188) < 1e-9 and abs(float(v[1]) - 0.7071067812) < 1e-9


def test_perron_vector_is_letter_frequency():
    from tracemaps.words import apply, parse_word, power

    w = str(apply(power(gen_fibonacci(1, 2), 10), parse_word("a")))
    assert abs(w.count("a") / len(w) - float(perron_data(1, 2).v1[0])) < 1e-6


@pytest.mark.parametrize("k, l", [(0, 3), (2, -1), (1, 0)])
def test_degenerate(k, l):
    with pytest.raises(DegenerateD):
        frequency_module(k, l)


def test_module_examples():
    mod = frequency_module(1, 2)
    lam = QuadExact.lam(1, 2)
    assert module_contains(mod, 0) and module_contains(mod, 1)
    assert module_contains(mod, (lam - 1) / 2)
    assert not module_contains(mod, Fraction(1, 2))
    assert mod.congruences == ((1, 2),)
    assert frequency_module(1, 1).congruences == ((0, 1),)


@pytest.mark.parametrize("k, l", NONSQUARE + [(2, 1), (6, 1)])
def test_module_contains_frequencies(k, l):
    mod = frequency_module(k, l)
    pd = perron_data(k, l)
    for v in pd.v1 + pd.v2:
        assert module_contains(mod, v)


@pytest.mark.parametrize("k, l", NONSQUARE)
def test_module_closure(k, l):
    mod = frequency_module(k, l)
    rnd = random.Random(k * 10 + l)
    D = mod.D
    for _ in range(50):
        nu = rnd.randint(-20, 20)
        mu = (-nu * mod.congruences[0][0]) % abs(D) + abs(D) * rnd.randint(-5, 5)
        if not mod.satisfies(mu, nu):
            continue
        mu2, nu2 = times_k_over_lambda(mu, nu, k, l)
        assert mod.satisfies(mu2, nu2)
        lam = QuadExact.lam(k, l)
        assert QuadExact(mu2, nu2, k, l) == QuadExact(mu, nu, k, l) * (lam - l)


def test_label_examples():
    assert label_to_idos(0, 0, 2) == 0
    assert label_to_idos(1, 0, 1) == QuadExact.lam(1, 1) - 1


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 6))
@settings(max_examples=100)
def test_labels_in_module_and_back(mu, nu, l):
    v = label_to_idos(mu, nu, l)
    assert module_contains(frequency_module(1, l), v)
    assert idos_to_label(v, l) == (mu, nu)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 6))
@settings(max_examples=100)
def test_module_members_are_labels(mu_t, nu_t, l):
    mod = frequency_module(1, l)
    if not mod.satisfies(mu_t, nu_t):
        return
    v = mod.element(mu_t, nu_t)
    mu, nu = idos_to_label(v, l)
    assert label_to_idos(mu, nu, l) == v


def test_square_discriminant_membership():
    # k = 2, l = 1: lam = 2, D = 4
    mod = frequency_module(2, 1)
    assert module_contains(mod, 0)
    assert module_contains(mod, 1)
    for v in perron_data(2, 1).v1:
        assert module_contains(mod, v)
