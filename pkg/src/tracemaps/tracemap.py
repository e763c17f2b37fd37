"""Trace maps of two-letter substitutions.

A word ``W(A, B)`` in two unimodular matrices has a half-trace that is an
integer polynomial in ``x = tr(A)/2, y = tr(B)/2, z = tr(AB)/2``.  It is found
in one left-to-right pass: every product of A and B is a combination of
1, A, B, AB with polynomial coefficients, and a block ``C^m`` multiplies in as
``U_{m-1}(c) C - U_{m-2}(c)`` (``c`` the half-trace of ``C``, any integer ``m``).
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import DivisionLeftRemainder
from .poly import ONE, ZERO, X, Y, Z, IntPoly3, chebyshev_u, divide_by_monic_in_z
from .words import Substitution, Word

_GEN_VAR = {"a": "x", "b": "y"}

# An element c0 + c1 A + c2 B + c3 AB of the algebra generated by A, B in
# Sl(2); 2x2 Cayley-Hamilton closes it under right multiplication.
_Elem = Tuple[IntPoly3, IntPoly3, IntPoly3, IntPoly3]


def _times_a(e: _Elem) -> _Elem:
    c0, c1, c2, c3 = e
    # AA = 2xA - 1, BA = 2yA + 2xB - AB - (4xy - 2z), ABA = 2zA + B - 2y
    return (
        -c1 - (4 * X * Y - 2 * Z) * c2 - 2 * Y * c3,
        c0 + 2 * X * c1 + 2 * Y * c2 + 2 * Z * c3,
        2 * X * c2 + c3,
        -c2,
    )


def _times_b(e: _Elem) -> _Elem:
    c0, c1, c2, c3 = e
    # AB = AB, BB = 2yB - 1, ABB = 2yAB - A
    return (-c2, -c3, c0 + 2 * Y * c2, c1 + 2 * Y * c3)


def _times_block(e: _Elem, g: str, m: int) -> _Elem:
    # C^m = U_{m-1}(c) C - U_{m-2}(c), any integer m
    v = _GEN_VAR[g]
    u1, u2 = chebyshev_u(m - 1, v), chebyshev_u(m - 2, v)
    ec = _times_a(e) if g == "a" else _times_b(e)
    return tuple(u1 * p - u2 * q for p, q in zip(ec, e))


def _halftrace(blocks) -> IntPoly3:
    e: _Elem = (ONE, ZERO, ZERO, ZERO)
    for g, m in blocks:
        e = _times_block(e, g, m)
    c0, c1, c2, c3 = e
    return c0 + c1 * X + c2 * Y + c3 * Z


def word_halftrace(w: Word) -> IntPoly3:
    """Polynomial p with p(x, y, z) = tr(W(A, B))/2 for all A, B in Sl(2, C)."""
    return _halftrace(w.blocks)


@dataclass(frozen=True)
class TraceMap:
    fx: IntPoly3
    fy: IntPoly3
    fz: IntPoly3

    @property
    def components(self) -> Tuple[IntPoly3, IntPoly3, IntPoly3]:
        return (self.fx, self.fy, self.fz)

    def __call__(self, x, y, z):
        return (self.fx.eval(x, y, z), self.fy.eval(x, y, z), self.fz.eval(x, y, z))

    def __str__(self):
        return f"({self.fx}, {self.fy}, {self.fz})"


IDENTITY_MAP = TraceMap(X, Y, Z)


def derive(rho: Substitution) -> TraceMap:
    wa, wb = rho.image_a, rho.image_b
    return TraceMap(_halftrace(wa.blocks), _halftrace(wb.blocks), _halftrace((wa * wb).blocks))


def compose_maps(F: TraceMap, G: TraceMap) -> TraceMap:
    """``F o G``: G's components substituted into F's.

    With this order ``derive(compose(r, s)) == compose_maps(derive(r), derive(s))``.
    """
    return TraceMap(*(p.substitute(G.fx, G.fy, G.fz) for p in F.components))


def iterate_map(F: TraceMap, n: int) -> TraceMap:
    out = IDENTITY_MAP
    for _ in range(n):
        out = compose_maps(out, F)
    return out


_FRICKE = X * X + Y * Y + Z * Z - 2 * X * Y * Z - 1


def fricke() -> IntPoly3:
    """``I = x^2 + y^2 + z^2 - 2xyz - 1``."""
    return _FRICKE


def fricke_value(x, y, z):
    return x * x + y * y + z * z - 2 * x * y * z - 1


def transformation_polynomial(rho: Substitution | TraceMap) -> IntPoly3:
    """Exact quotient ``I(F(x, y, z)) / I(x, y, z)``."""
    F = rho if isinstance(rho, TraceMap) else derive(rho)
    numerator = _FRICKE.substitute(F.fx, F.fy, F.fz)
    q, r = divide_by_monic_in_z(numerator, _FRICKE)
    if not r.is_zero():
        raise DivisionLeftRemainder(f"I o F leaves remainder {r} for map {F}")
    return q


class SubstClass(enum.Enum):
    INVERTIBLE = "Invertible"
    NONTRIVIAL_KERNEL = "NontrivialKernel"
    INJECTIVE_NOT_ONTO = "InjectiveNotOnto"


@dataclass(frozen=True)
class Classification:
    kind: SubstClass
    witness: IntPoly3


def classify(rho: Substitution) -> Classification:
    P = transformation_polynomial(rho)
    if P == ONE:
        kind = SubstClass.INVERTIBLE
    elif P == ZERO:
        kind = SubstClass.NONTRIVIAL_KERNEL
    elif P.is_constant():
        # constants other than 0 and 1 cannot occur for a genuine trace map
        raise DivisionLeftRemainder(f"transformation polynomial is the constant {P}")
    else:
        kind = SubstClass.INJECTIVE_NOT_ONTO
    return Classification(kind, P)


def check_invariant(F: TraceMap, H: IntPoly3) -> bool:
    return H.substitute(F.fx, F.fy, F.fz) == H


def fricke_surface_matrices(x: complex, y: complex, branch: int = 1):
    """Diagonal pair (A, B) in Sl(2, C) with half-traces (x, y, z) on I = 0.

    ``A = diag(al, 1/al)``, ``B = diag(be^eps, be^-eps)`` with
    ``al = x + sqrt(x^2 - 1)`` (principal branch) and ``eps = branch``; the two
    branches give the two roots z of I(x, y, z) = 0.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    x, y = complex(x), complex(y)
    al = x + cmath.sqrt(x * x - 1)
    be = y + cmath.sqrt(y * y - 1)
    be_e = be if branch == 1 else 1 / be
    A = np.diag([al, 1 / al])
    B = np.diag([be_e, 1 / be_e])
    return A, B


def matrix_halftraces(A, B):
    """(tr A, tr B, tr AB) / 2 for numeric 2x2 matrices."""
    return (np.trace(A) / 2, np.trace(B) / 2, np.trace(A @ B) / 2)
