"""Sparse polynomials in Z[x, y, z] with exact integer coefficients.

Terms print with the ``z`` exponent as the leading sort key, then total degree
in ``x, y``, then the ``x`` exponent (all descending).  This puts a polynomial
monic in ``z`` in the same shape the division routine sees it:

>>> str(parse("x^2 + y^2 + z^2 - 2*x*y*z - 1"))
'z^2 - 2*x*y*z + x^2 + y^2 - 1'
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from .errors import NotMonicInZ

Exp = Tuple[int, int, int]
VARS = ("x", "y", "z")


def _term_key(e: Exp):
    i, j, k = e
    return (k, i + j, i)


class IntPoly3:
    """Immutable sparse polynomial; ``terms`` maps exponent triples to ints."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Exp, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    if len(e) != 3 or min(e) < 0:
                        raise ValueError(f"bad exponent {e!r}")
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "IntPoly3":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "IntPoly3":
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    @classmethod
    def promote(cls, other) -> "IntPoly3":
        if isinstance(other, IntPoly3):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPoly3(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly3({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return other
        out: Dict[Exp, int] = {}
        for (a1, b1, c1), u in self.terms.items():
            for (a2, b2, c2), v in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + u * v
        return IntPoly3(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0, 0, 0), 0)

    def degree(self, var: str = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = VARS.index(var)
        return max(e[i] for e in self.terms)

    def coeff_in_z(self, d: int) -> "IntPoly3":
        """Coefficient of ``z^d`` as a polynomial in ``x, y``."""
        return IntPoly3({(i, j, 0): c for (i, j, k), c in self.terms.items() if k == d})

    def sorted_terms(self) -> Iterator[Tuple[Exp, int]]:
        for e in sorted(self.terms, key=_term_key, reverse=True):
            yield e, self.terms[e]

    # evaluation and composition

    def eval(self, x, y, z):
        """Evaluate by nested Horner schemes (z outermost, then y, then x).

        Works for any scalars closed under ``+`` and ``*`` with ints
        (Fraction, float, complex, numpy arrays).
        """
        if not self.terms:
            return 0 * x
        nested: Dict[int, Dict[int, Dict[int, int]]] = {}
        for (i, j, k), c in self.terms.items():
            nested.setdefault(k, {}).setdefault(j, {})[i] = c

        def horner(coeffs: Dict[int, object], t):
            top = max(coeffs)
            acc = coeffs[top]
            for d in range(top - 1, -1, -1):
                acc = acc * t
                if d in coeffs:
                    acc = acc + coeffs[d]
            return acc

        by_z = {}
        for k, ys in nested.items():
            by_y = {j: horner(xs, x) for j, xs in ys.items()}
            by_z[k] = horner(by_y, y)
        return horner(by_z, z)

    def __call__(self, x, y, z):
        return self.eval(x, y, z)

    def substitute(self, fx: "IntPoly3", fy: "IntPoly3", fz: "IntPoly3") -> "IntPoly3":
        """Replace ``x, y, z`` by polynomials and expand."""
        fx, fy, fz = (IntPoly3.promote(f) for f in (fx, fy, fz))
        return IntPoly3.promote(self.eval(fx, fy, fz)) if self.terms else ZERO

    # text

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for n, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(VARS, e) if p
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if n == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"IntPoly3({str(self)!r})"


ZERO = IntPoly3()
ONE = IntPoly3.const(1)
X = IntPoly3.var("x")
Y = IntPoly3.var("y")
Z = IntPoly3.var("z")


def add(p, q):
    return IntPoly3.promote(p) + q


def sub(p, q):
    return IntPoly3.promote(p) - q


def mul(p, q):
    return IntPoly3.promote(p) * q


def neg(p):
    return -IntPoly3.promote(p)


def equals(p, q) -> bool:
    return IntPoly3.promote(p) == IntPoly3.promote(q)


def evaluate(p: IntPoly3, point):
    return p.eval(*point)


def substitute(p: IntPoly3, fx, fy, fz) -> IntPoly3:
    return p.substitute(fx, fy, fz)


# --- Chebyshev polynomials of the second kind ---------------------------------


@lru_cache(maxsize=None)
def _cheb_coeffs(n: int) -> Tuple[int, ...]:
    """Coefficient list (low to high) of U_n(t), any integer n."""
    if n == -1:
        return ()
    if n == 0:
        return (1,)
    if n > 0:
        a, b = _cheb_coeffs(n - 1), _cheb_coeffs(n - 2)
        out = [0] * (len(a) + 1)
        for d, c in enumerate(a):
            out[d + 1] += 2 * c
        for d, c in enumerate(b):
            out[d] -= c
    else:
        # run the recurrence backwards: U_{n} = 2t U_{n+1} - U_{n+2}
        a, b = _cheb_coeffs(n + 1), _cheb_coeffs(n + 2)
        out = [0] * (max(len(a) + 1, len(b)))
        for d, c in enumerate(a):
            out[d + 1] += 2 * c
        for d, c in enumerate(b):
            out[d] -= c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def chebyshev_u(n: int, var: str = "x") -> IntPoly3:
    """U_n in the named variable, with U_{-1} = 0, U_0 = 1, for all n in Z."""
    idx = VARS.index(var)
    terms = {}
    for d, c in enumerate(_cheb_coeffs(n)):
        e = [0, 0, 0]
        e[idx] = d
        terms[tuple(e)] = c
    return IntPoly3(terms)


def chebyshev_u_value(n: int, t, one=1):
    """Numeric U_n(t) by the three-term recurrence (forwards or backwards).

    ``one`` supplies the unit of the scalar type in use, so this also runs on
    scaled numbers and numpy arrays.
    """
    zero = one - one
    if n == -1:
        return zero
    if n == 0:
        return one
    prev, cur = zero, one  # U_{-1}, U_0
    two_t = t + t
    if n > 0:
        for _ in range(n):
            prev, cur = cur, two_t * cur - prev
        return cur
    # backwards: U_{m-1} = 2t U_m - U_{m+1}; start at (U_0, U_{-1})
    nxt, cur = one, zero
    for _ in range(-n - 1):
        nxt, cur = cur, two_t * cur - nxt
    return cur


# --- division by polynomials monic in z ------------------------------------------


def divide_by_monic_in_z(num: IntPoly3, den: IntPoly3) -> Tuple[IntPoly3, IntPoly3]:
    """Return ``(q, r)`` with ``num = q*den + r`` and ``deg_z r < deg_z den``."""
    d = den.degree("z")
    if d < 0 or den.coeff_in_z(d) != ONE:
        raise NotMonicInZ(f"leading z-coefficient of {den} is not 1")
    q_terms: Dict[Exp, int] = {}
    r = num
    while r.terms and r.degree("z") >= d:
        top = r.degree("z")
        lead = {(i, j, top - d): c for (i, j, k), c in r.terms.items() if k == top}
        t = IntPoly3(lead)
        for e, c in lead.items():
            q_terms[e] = q_terms.get(e, 0) + c
        r = r - t * den
    return IntPoly3(q_terms), r


# --- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])|(\*\*|[-+*^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        num, var, op = m.groups()
        out.append(("num", int(num)) if num else ("var", var) if var else ("op", op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse(text: str) -> IntPoly3:
    """Parse an integer polynomial expression in x, y, z.

    Accepts ``+ - * ^`` (or ``**``), parentheses and integer literals; the
    canonical printed form round-trips exactly.
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr():
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() == ("op", "*"):
            take()
            acc = acc * factor()
        return acc

    def factor():
        base = atom()
        if peek() in (("op", "^"), ("op", "**")):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            base = base**val
        return base

    def atom():
        kind, val = take() if pos < len(toks) else (None, None)
        if kind == "num":
            return IntPoly3.const(val)
        if kind == "var":
            return IntPoly3.var(val)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -factor()
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    if not toks:
        raise ValueError("empty polynomial")
    result = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return result


def rational_point(*vals):
    return tuple(Fraction(v) for v in vals)
