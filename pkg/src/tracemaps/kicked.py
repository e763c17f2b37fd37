"""Delta-kicked two-level systems.

A kick of strength ``a`` about the unit axis ``n`` is the SU(2) element
``cos(a) 1 - i sin(a) n.sigma``.  Kicks ordered along a substitution word
give U_{n+1} = U_{n-1}^k U_n^l, whose half-traces follow the trace map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .fibfamily import closed_form_step
from .tracemap import TraceMap, fricke_value

SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
RENORM_EVERY = 10  # rounding grows like lam^n between projections


@dataclass(frozen=True)
class Kick:
    a: float
    axis: Tuple[float, float, float]

    def __post_init__(self):
        if abs(math.sqrt(sum(c * c for c in self.axis)) - 1.0) > 1e-12:
            raise ValueError(f"kick axis {self.axis} is not a unit vector")

    @classmethod
    def normalized(cls, a: float, axis: Sequence[float]) -> "Kick":
        v = np.asarray(axis, dtype=float)
        r = float(np.linalg.norm(v))
        if r == 0.0:
            raise ValueError("zero kick axis")
        return cls(float(a), tuple(float(c) for c in v / r))


def su2_kick(k: Kick) -> np.ndarray:
    n_sigma = sum(c * s for c, s in zip(k.axis, SIGMA))
    return math.cos(k.a) * np.eye(2, dtype=complex) - 1j * math.sin(k.a) * n_sigma


def _dot(u, v) -> float:
    return sum(p * q for p, q in zip(u, v))


def initial_traces(k0: Kick, k1: Kick) -> Tuple[float, float, float]:
    """Half-traces of U0, U1 and U0 U1."""
    c = _dot(k0.axis, k1.axis)
    x2 = math.cos(k0.a) * math.cos(k1.a) - math.sin(k0.a) * math.sin(k1.a) * c
    return math.cos(k0.a), math.cos(k1.a), x2


def invariant_value(k0: Kick, k1: Kick) -> float:
    c = _dot(k0.axis, k1.axis)
    return (c * c - 1.0) * (math.sin(k0.a) * math.sin(k1.a)) ** 2


@dataclass
class TraceOrbit:
    points: List[Tuple[float, float, float]]
    I0: float

    def invariants(self) -> List[float]:
        return [fricke_value(*p) for p in self.points]


def orbit(F, start, steps: int) -> TraceOrbit:
    """Iterate F (a TraceMap, or (k, l) for the closed form) ``steps`` times."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if isinstance(F, TraceMap):
        step = F
    else:
        k, l = F
        step = lambda x, y, z: closed_form_step(k, l, x, y, z, 1.0)  # noqa: E731
    p = tuple(float(v) for v in start)
    pts = [p]
    for _ in range(steps):
        p = tuple(float(v) for v in step(*p))
        pts.append(p)
    return TraceOrbit(pts, fricke_value(*pts[0]))


def polar_unitary(U: np.ndarray) -> np.ndarray:
    """Nearest unitary (polar factor), rescaled to determinant one."""
    W, _, Vh = np.linalg.svd(U)
    Q = W @ Vh
    return Q / np.sqrt(np.linalg.det(Q))


def _mpow(U, n: int):
    if n < 0:
        return np.linalg.matrix_power(U.conj().T, -n)
    return np.linalg.matrix_power(U, n)


def matrix_orbit(
    k0: Kick, k1: Kick, k: int, l: int, steps: int, renorm_every: int = RENORM_EVERY
) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Pairs (U_n, U_{n+1}) for n = 0..steps, U_0 and U_1 the two kicks.

    Both matrices are projected back onto SU(2) every ``renorm_every`` steps.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    A, B = su2_kick(k0), su2_kick(k1)
    out = [(A, B)]
    for i in range(1, steps + 1):
        A, B = B, _mpow(A, k) @ _mpow(B, l)
        if renorm_every and i % renorm_every == 0:
            A, B = polar_unitary(A), polar_unitary(B)
        out.append((A, B))
    return out


def matrix_halftraces(pair) -> Tuple[float, float, float]:
    A, B = pair
    return (
        float(np.trace(A).real) / 2,
        float(np.trace(B).real) / 2,
        float(np.trace(A @ B).real) / 2,
    )
