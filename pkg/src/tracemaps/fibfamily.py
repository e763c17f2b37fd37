"""The generalized Fibonacci family ``a -> b, b -> b^l a^k``.

Closed-form trace maps, transformation polynomials, the integer-eigenvalue
condition and the two extra invariants beyond the Fricke character.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .poly import IntPoly3, X, Y, Z, chebyshev_u, chebyshev_u_value
from .tracemap import TraceMap


@dataclass(frozen=True)
class FibParams:
    k: int
    l: int

    @property
    def nonsingular(self) -> bool:
        return self.k != 0

    @property
    def discriminant(self) -> int:
        return self.l * self.l + 4 * self.k


def _g(k: int, l: int) -> IntPoly3:
    ux = {n: chebyshev_u(n, "x") for n in (k - 1, k - 2)}
    uy = {n: chebyshev_u(n, "y") for n in (l - 1, l - 2)}
    return (
        ux[k - 1] * uy[l - 1] * Z
        - ux[k - 1] * uy[l - 2] * X
        - ux[k - 2] * uy[l - 1] * Y
        + ux[k - 2] * uy[l - 2]
    )


def closed_form_map(p: FibParams) -> TraceMap:
    """(y, g, h) with g from the Chebyshev formula and h = g at l + 1."""
    return TraceMap(Y, _g(p.k, p.l), _g(p.k, p.l + 1))


def closed_form_transformation(p: FibParams) -> IntPoly3:
    u = chebyshev_u(p.k - 1, "x")
    return u * u


def closed_form_step(k: int, l: int, x, y, z, one=1):
    """One numeric application of the closed-form map.

    Scalar-type agnostic (floats, complex, numpy arrays, scaled numbers);
    ``one`` is the unit of that type.
    """
    uk1 = chebyshev_u_value(k - 1, x, one)
    uk2 = chebyshev_u_value(k - 2, x, one)
    ul2 = chebyshev_u_value(l - 2, y, one)
    ul1 = chebyshev_u_value(l - 1, y, one)
    ul0 = chebyshev_u_value(l, y, one)

    def g(a, b):  # a = U_{l-1}(y), b = U_{l-2}(y) for the chosen l
        return uk1 * a * z - uk1 * b * x - uk2 * a * y + uk2 * b

    return y, g(ul1, ul2), g(ul0, ul1)


def integer_eigenvalue_condition(p: FibParams) -> Optional[int]:
    """Integer m with k = m*l + m^2 (so lambda+ = l + m, lambda- = -m), if any.

    Of the two solutions m and -(l + m) the one with smaller |m| is returned,
    the non-negative one on a tie.
    """
    disc = p.discriminant
    if disc < 0:
        return None
    s = math.isqrt(disc)
    if s * s != disc:
        return None
    # s and l share parity because s^2 = l^2 + 4k
    roots = {(-p.l + s) // 2, (-p.l - s) // 2}
    return min(roots, key=lambda m: (abs(m), m < 0))


def invariant_H(l: int) -> IntPoly3:
    """Invariant of the (k = l + 1, l) map: U_{l+1}(x) y - U_l(x) z."""
    return chebyshev_u(l + 1, "x") * Y - chebyshev_u(l, "x") * Z


def invariant_H_tilde(l: int) -> IntPoly3:
    """Invariant of the (k = 1 - l, l) map: U_{l-1}(x) y - U_{l-2}(x) z."""
    return chebyshev_u(l - 1, "x") * Y - chebyshev_u(l - 2, "x") * Z


def invariant_H_pm(l: int, sign: int) -> IntPoly3:
    """Combined form for k = 1 +- l: +-(U_{+-(l+1)}(x) y - U_{+-l}(x) z)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return sign * (chebyshev_u(sign * (l + 1), "x") * Y - chebyshev_u(sign * l, "x") * Z)


def known_invariant(k: int, l: int) -> Optional[str]:
    """Name of the family invariant that applies to (k, l), if any."""
    if k == l + 1:
        return "H"
    if k == 1 - l:
        return "H~"
    return None


def fib_numbers(l: int, n: int, k: int = 1) -> int:
    """f_n with f_{n+1} = l f_n + k f_{n-1}, f_0 = 0, f_1 = 1 (n >= 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, l * b + k * a
    return a


def approximant_length(l: int, n: int, k: int = 1) -> int:
    """Length f_n + k f_{n-1} of rho^n(a) = rho^(n-1)(b); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return fib_numbers(l, n, k) + k * fib_numbers(l, n - 1, k)
