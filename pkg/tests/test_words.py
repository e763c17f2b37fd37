import pytest
from hypothesis import given

from oracles import substitutions, words
from tracemaps.errors import RuleSyntaxError
from tracemaps.words import (
    EMPTY,
    FIBONACCI,
    IDENTITY,
    P,
    SIGMA,
    U,
    Substitution,
    apply,
    commutator,
    compose,
    det,
    format_rule,
    gen_fibonacci,
    mat_mul,
    parse_rule,
    parse_word,
    power,
    substitution_matrix,
)


def test_free_reduction():
    assert parse_word("aAbB") == EMPTY
    assert str(parse_word("abBa")) == "aa"
    assert str(parse_word("e")) == "e"
    assert len(parse_word("aaBab")) == 5


def test_bad_letter():
    with pytest.raises(RuleSyntaxError):
        parse_word("abc")


@given(words)
def test_inverse_cancels(w):
    assert w * w.inverse() == EMPTY
    assert w.inverse().inverse() == w


@given(words)
def test_str_roundtrip(w):
    assert parse_word(str(w)) == w


def test_commutator():
    a, b = parse_word("a"), parse_word("b")
    assert str(commutator(a, b)) == "abAB"
    assert commutator(a, a) == EMPTY


def test_parse_rule_whitespace_and_empty():
    rho = parse_rule(" a -> b ; b->bA ")
    assert format_rule(rho) == "a->b; b->bA"
    assert parse_rule("a->e;b->b").image_a == EMPTY


@pytest.mark.parametrize("text", ["a->b", "a->b;b->c", "a->b;a->b", "a->be;b->a", "b=a;a->b"])
def test_parse_rule_errors(text):
    with pytest.raises(RuleSyntaxError):
        parse_rule(text)


def test_generators():
    assert format_rule(U) == "a->ab; b->b"
    assert format_rule(SIGMA) == "a->A; b->b"
    assert format_rule(P) == "a->b; b->a"
    assert format_rule(FIBONACCI) == "a->b; b->ba"
    assert format_rule(gen_fibonacci(2, 1)) == "a->b; b->baa"
    assert format_rule(gen_fibonacci(-1, 2)) == "a->b; b->bbA"


def test_fibonacci_words():
    w = parse_word("a")
    lengths = []
    for _ in range(8):
        w = apply(FIBONACCI, w)
        lengths.append(len(w))
    assert lengths == [1, 2, 3, 5, 8, 13, 21, 34]


def test_power_and_identity():
    assert power(FIBONACCI, 0) == IDENTITY
    assert power(FIBONACCI, 3) == compose(compose(FIBONACCI, FIBONACCI), FIBONACCI)


@given(substitutions, substitutions, words)
def test_compose_applies_first_rule_first(r, s, w):
    assert apply(compose(r, s), w) == apply(s, apply(r, w))


@given(substitutions, substitutions, substitutions)
def test_compose_associative(r, s, t):
    assert compose(compose(r, s), t) == compose(r, compose(s, t))


@given(substitutions, substitutions)
def test_substitution_matrix_multiplicative(r, s):
    assert substitution_matrix(compose(r, s)) == mat_mul(substitution_matrix(r), substitution_matrix(s))


def test_generator_determinants():
    assert [det(substitution_matrix(g)) for g in (U, SIGMA, P)] == [1, -1, -1]


def test_substitution_call():
    assert FIBONACCI(parse_word("ab")) == parse_word("bba")
    assert Substitution(parse_word("a"), parse_word("b"))(parse_word("aB")) == parse_word("aB")


@given(substitutions, words, words)
def test_apply_homomorphism(r, u, v):
    assert apply(r, u * v) == apply(r, u) * apply(r, v)


@given(words)
def test_inner_automorphism_has_identity_matrix(w):
    a, b = parse_word("a"), parse_word("b")
    inner = Substitution(w * a * w.inverse(), w * b * w.inverse())
    assert substitution_matrix(inner) == ((1, 0), (0, 1))


def test_generator_orders():
    assert compose(P, P) == IDENTITY
    assert compose(SIGMA, SIGMA) == IDENTITY
