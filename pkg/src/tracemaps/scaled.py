"""Floats with an unbounded binary exponent.

Partition functions of long chains overflow doubles after a few trace-map
generations; these types keep a double mantissa and a Python-int exponent.
"""

from __future__ import annotations

import math

import numpy as np

_LOG2 = math.log(2.0)


def _norm(m: float, e: int):
    if m == 0.0:
        return 0.0, 0
    if not math.isfinite(m):
        raise OverflowError(f"non-finite mantissa {m!r}")
    f, k = math.frexp(m)  # f in [0.5, 1)
    return f * 2.0, e + k - 1


class ScaledScalar:
    """``mantissa * 2**exponent`` with ``|mantissa|`` in [1, 2) or zero."""

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: float = 0.0, exponent: int = 0):
        self.mantissa, self.exponent = _norm(float(mantissa), int(exponent))

    @classmethod
    def of(cls, v) -> "ScaledScalar":
        if isinstance(v, ScaledScalar):
            return v
        return cls(float(v), 0)

    def __add__(self, other):
        o = ScaledScalar.of(other)
        if self.mantissa == 0.0:
            return o
        if o.mantissa == 0.0:
            return self
        a, b = (self, o) if self.exponent >= o.exponent else (o, self)
        diff = a.exponent - b.exponent
        if diff > 1100:
            return a
        return ScaledScalar(a.mantissa + math.ldexp(b.mantissa, -diff), a.exponent)

    __radd__ = __add__

    def __neg__(self):
        out = ScaledScalar()
        out.mantissa, out.exponent = -self.mantissa, self.exponent
        return out

    def __sub__(self, other):
        return self + (-ScaledScalar.of(other))

    def __rsub__(self, other):
        return ScaledScalar.of(other) - self

    def __mul__(self, other):
        o = ScaledScalar.of(other)
        return ScaledScalar(self.mantissa * o.mantissa, self.exponent + o.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ScaledScalar.of(other)
        if o.mantissa == 0.0:
            raise ZeroDivisionError("ScaledScalar division by zero")
        return ScaledScalar(self.mantissa / o.mantissa, self.exponent - o.exponent)

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def log(self) -> float:
        if self.mantissa <= 0.0:
            raise ValueError("log of a non-positive ScaledScalar")
        return math.log(self.mantissa) + self.exponent * _LOG2

    def __float__(self):
        try:
            return math.ldexp(self.mantissa, self.exponent)
        except OverflowError:
            return math.copysign(math.inf, self.mantissa)

    def __eq__(self, other):
        o = ScaledScalar.of(other)
        return self.mantissa == o.mantissa and self.exponent == o.exponent

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def __repr__(self):
        return f"ScaledScalar({self.mantissa!r}, {self.exponent})"


class ScaledMatrix:
    """Real matrix ``M * 2**exponent`` with max |entry| of M in [1, 2)."""

    __slots__ = ("M", "exponent")

    def __init__(self, M, exponent: int = 0):
        M = np.array(M, dtype=float)
        peak = float(np.max(np.abs(M)))
        if peak == 0.0:
            self.M, self.exponent = M, 0
            return
        _, k = math.frexp(peak)
        self.M = np.ldexp(M, -(k - 1))
        self.exponent = int(exponent) + k - 1

    def __matmul__(self, other: "ScaledMatrix") -> "ScaledMatrix":
        return ScaledMatrix(self.M @ other.M, self.exponent + other.exponent)

    def __pow__(self, n: int) -> "ScaledMatrix":
        if n < 0:
            raise ValueError("negative powers not supported")
        out = ScaledMatrix(np.eye(len(self.M)))
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def trace(self) -> ScaledScalar:
        return ScaledScalar(float(np.trace(self.M)), self.exponent)

    def to_array(self) -> np.ndarray:
        return np.ldexp(self.M, self.exponent)
