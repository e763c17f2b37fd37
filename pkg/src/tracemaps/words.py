"""Words in the free group on ``a, b`` and substitution homomorphisms.

Words are stored as run-length blocks ``(generator, exponent)`` and are always
freely reduced.  Text form uses ``a, b`` for the generators and ``A, B`` for
their inverses; the empty word prints as ``e``.

>>> str(apply(FIBONACCI, parse_word("ab")))
'bba'
>>> format_rule(compose(P, P))
'a->a; b->b'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import RuleSyntaxError

GENERATORS = ("a", "b")
_INVERSE_CHAR = {"a": "A", "b": "B"}
_CHAR = {"a": ("a", 1), "b": ("b", 1), "A": ("a", -1), "B": ("b", -1)}

Block = Tuple[str, int]
IntMatrix2 = Tuple[Tuple[int, int], Tuple[int, int]]


def _push(stack: list, gen: str, exp: int) -> None:
    if exp == 0:
        return
    if stack and stack[-1][0] == gen:
        e = stack[-1][1] + exp
        stack.pop()
        if e:
            stack.append((gen, e))
    else:
        stack.append((gen, exp))


def _reduce_blocks(blocks: Iterable[Block]) -> Tuple[Block, ...]:
    stack: list = []
    for gen, exp in blocks:
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        _push(stack, gen, int(exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced element of F2 (construct through :func:`reduce`)."""

    blocks: Tuple[Block, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", _reduce_blocks(self.blocks))

    @property
    def letters(self) -> Tuple[Tuple[str, int], ...]:
        """Letter sequence as ``(generator, sign)`` pairs."""
        out = []
        for gen, exp in self.blocks:
            sign = 1 if exp > 0 else -1
            out.extend([(gen, sign)] * abs(exp))
        return tuple(out)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.blocks)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.blocks + other.blocks)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.blocks)))

    def exponent_sum(self, gen: str) -> int:
        return sum(e for g, e in self.blocks if g == gen)

    def is_positive(self) -> bool:
        return all(e > 0 for _, e in self.blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "e"
        return "".join((g if e > 0 else _INVERSE_CHAR[g]) * abs(e) for g, e in self.blocks)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY = Word()


def reduce(raw) -> Word:
    """Freely reduce a raw letter sequence.

    ``raw`` may be a string in the ``aAbB`` alphabet or an iterable of
    ``(generator, signed exponent)`` pairs.
    """
    if isinstance(raw, str):
        return parse_word(raw)
    return Word(tuple(raw))


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("e", ""):
        return EMPTY
    try:
        return Word(tuple(_CHAR[c] for c in text))
    except KeyError as exc:
        raise RuleSyntaxError(f"bad letter {exc.args[0]!r} in word {text!r}") from None


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return w.inverse()


def commutator(u: Word, v: Word) -> Word:
    """Group commutator ``u v u^-1 v^-1``."""
    return u * v * u.inverse() * v.inverse()


@dataclass(frozen=True)
class Substitution:
    image_a: Word
    image_b: Word

    def image(self, gen: str) -> Word:
        return self.image_a if gen == "a" else self.image_b

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __str__(self) -> str:
        return format_rule(self)


def apply(rho: Substitution, w: Word) -> Word:
    """Homomorphic image of ``w``; inverse letters map to inverted images."""
    out: list = []
    for gen, exp in w.blocks:
        img = rho.image(gen)
        if exp < 0:
            img = img.inverse()
        for _ in range(abs(exp)):
            for g, e in img.blocks:
                _push(out, g, e)
    return Word(tuple(out))


def compose(rho1: Substitution, rho2: Substitution) -> Substitution:
    """Product ``rho1 rho2``: apply ``rho1``'s rule first, then ``rho2``.

    As maps of F2 this is ``rho2 o rho1``, which makes both the substitution
    matrix and the trace map multiplicative in the written order.
    """
    return Substitution(apply(rho2, rho1.image_a), apply(rho2, rho1.image_b))


def power(rho: Substitution, n: int) -> Substitution:
    if n < 0:
        raise ValueError("substitutions need not be invertible; n must be >= 0")
    out = IDENTITY
    for _ in range(n):
        out = compose(out, rho)
    return out


def substitution_matrix(rho: Substitution) -> IntMatrix2:
    """Signed letter counts of the images, read row-wise."""
    wa, wb = rho.image_a, rho.image_b
    return (
        (wa.exponent_sum("a"), wa.exponent_sum("b")),
        (wb.exponent_sum("a"), wb.exponent_sum("b")),
    )


def mat_mul(m: IntMatrix2, n: IntMatrix2) -> IntMatrix2:
    return tuple(
        tuple(sum(m[i][t] * n[t][j] for t in range(2)) for j in range(2)) for i in range(2)
    )


def det(m: IntMatrix2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def transpose(m: IntMatrix2) -> IntMatrix2:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def _w(text: str) -> Word:
    return parse_word(text)


IDENTITY = Substitution(_w("a"), _w("b"))


def generator_U() -> Substitution:
    return Substitution(_w("ab"), _w("b"))


def generator_sigma() -> Substitution:
    return Substitution(_w("A"), _w("b"))


def generator_P() -> Substitution:
    return Substitution(_w("b"), _w("a"))


def gen_fibonacci(k: int, l: int) -> Substitution:
    """``a -> b, b -> b^l a^k``; negative powers use inverse letters."""
    return Substitution(_w("b"), Word((("b", l), ("a", k))))


U = generator_U()
SIGMA = generator_sigma()
P = generator_P()
FIBONACCI = gen_fibonacci(1, 1)

_RULE_PART = re.compile(r"^([ab])->([aAbBe]*)$")


def parse_rule(text: str) -> Substitution:
    """Parse ``"a->b; b->ba"`` (whitespace is ignored)."""
    compact = re.sub(r"\s+", "", text)
    parts = [p for p in compact.split(";") if p]
    images = {}
    for part in parts:
        m = _RULE_PART.match(part)
        if m is None:
            raise RuleSyntaxError(f"cannot parse rule component {part!r}")
        gen, img = m.groups()
        if gen in images:
            raise RuleSyntaxError(f"generator {gen} given twice")
        if "e" in img and img != "e":
            raise RuleSyntaxError(f"'e' must stand alone in {part!r}")
        images[gen] = parse_word(img)
    if set(images) != {"a", "b"}:
        raise RuleSyntaxError(f"rule must give images of a and b: {text!r}")
    return Substitution(images["a"], images["b"])


def format_rule(rho: Substitution) -> str:
    return f"a->{rho.image_a}; b->{rho.image_b}"
