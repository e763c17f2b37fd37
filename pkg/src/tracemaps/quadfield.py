"""Exact arithmetic in Q(lambda), lambda the Perron root of t^2 = l t + k."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from .errors import FieldMismatch


class QuadExact:
    """``a + b*lam`` with rational a, b and ``lam^2 = k + l*lam``.

    When ``l^2 + 4k`` is a perfect square ``lam`` is itself an integer; values
    are then folded to ``(a + b*lam, 0)`` so equality stays structural.
    """

    __slots__ = ("a", "b", "k", "l")

    def __init__(self, a, b, k: int, l: int):
        a, b = Fraction(a), Fraction(b)
        lam = perron_root_if_rational(k, l)
        if lam is not None and b:
            a, b = a + b * lam, Fraction(0)
        self.a, self.b, self.k, self.l = a, b, int(k), int(l)

    @classmethod
    def lam(cls, k: int, l: int) -> "QuadExact":
        return cls(0, 1, k, l)

    @property
    def field(self):
        return (self.k, self.l)

    @property
    def discriminant(self) -> int:
        return self.l * self.l + 4 * self.k

    def _coerce(self, other) -> "QuadExact":
        if isinstance(other, QuadExact):
            if other.field != self.field:
                raise FieldMismatch(f"Q(lam) for (k, l) = {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Rational)):
            return QuadExact(other, 0, self.k, self.l)
        raise TypeError(f"cannot combine QuadExact with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExact(self.a + o.a, self.b + o.b, self.k, self.l)

    __radd__ = __add__

    def __neg__(self):
        return QuadExact(-self.a, -self.b, self.k, self.l)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        # (a + b lam)(c + d lam) with lam^2 = k + l lam
        bd = self.b * o.b
        return QuadExact(
            self.a * o.a + bd * self.k,
            self.a * o.b + self.b * o.a + bd * self.l,
            self.k,
            self.l,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExact":
        """Image under lam -> lam- = l - lam."""
        return QuadExact(self.a + self.b * self.l, -self.b, self.k, self.l)

    def norm(self) -> Fraction:
        n = self * self.conjugate()
        assert n.b == 0
        return n.a

    def inverse(self) -> "QuadExact":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExact has zero norm")
        c = self.conjugate()
        return QuadExact(c.a / n, c.b / n, self.k, self.l)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExact(1, 0, self.k, self.l)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.k, self.l))

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self):
        return float(self.a) + float(self.b) * perron_root_float(self.k, self.l)

    def sqrt_form(self):
        """(r, s) with value r + s*sqrt(l^2 + 4k)."""
        return self.a + self.b * Fraction(self.l, 2), self.b / 2

    def __repr__(self):
        return f"QuadExact({self.a}, {self.b}; k={self.k}, l={self.l})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*lam"


def perron_root_if_rational(k: int, l: int):
    disc = l * l + 4 * k
    if disc < 0:
        return None
    s = math.isqrt(disc)
    if s * s != disc:
        return None
    return Fraction(l + s, 2)


def perron_root_float(k: int, l: int) -> float:
    disc = l * l + 4 * k
    if disc < 0:
        raise ValueError(f"no real Perron root for (k, l) = ({k}, {l})")
    return (l + math.sqrt(disc)) / 2
