from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tracemaps.errors import FieldMismatch
from tracemaps.quadfield import QuadExact, perron_root_float, perron_root_if_rational

fr = st.fractions(max_denominator=20).filter(lambda f: abs(f) < 50)
fields = st.sampled_from([(1, 1), (1, 2), (2, 3), (1, 5), (3, 1)])


@st.composite
def triples(draw):
    k, l = draw(fields)
    return [QuadExact(draw(fr), draw(fr), k, l) for _ in range(3)]


@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if a != 0:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(triples())
def test_float_consistent(t):
    a, b, _ = t
    assert abs(float(a * b) - float(a) * float(b)) < 1e-9 * (1 + abs(float(a) * float(b)))


def test_lambda_relation():
    for k, l in [(1, 1), (1, 2), (2, 3), (-1, 3)]:
        lam = QuadExact.lam(k, l)
        assert lam * lam == k + l * lam
        assert 1 / lam == (lam - l) / k


def test_conjugate_and_norm():
    lam = QuadExact.lam(1, 1)
    assert lam.conjugate() == 1 - lam
    assert lam.norm() == -1


def test_rational_root_folding():
    assert perron_root_if_rational(2, 1) == 2
    lam = QuadExact.lam(2, 1)
    assert lam.is_rational() and lam == 2
    assert perron_root_if_rational(1, 1) is None


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        QuadExact(1, 1, 1, 1) + QuadExact(1, 1, 1, 2)


def test_sqrt_form():
    lam = QuadExact.lam(1, 2)
    assert lam.sqrt_form() == (Fraction(1), Fraction(1, 2))
    assert abs(perron_root_float(1, 2) - (1 + 2 ** 0.5)) < 1e-15
