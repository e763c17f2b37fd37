"""Free energy of Ising chains modulated by ``a -> b, b -> b^l a^k``.

Letter i of the word carries the bond transfer matrix

    T_i = [[exp(K_i + h_i), exp(-K_i)], [exp(-K_i), exp(K_i - h_i)]]

i.e. coupling K_i on bond (j, j+1) and field h_i split evenly between its two
ends.  With w_0 = a, w_1 = b, w_{n+1} = rho(w_n) the chain matrices obey
T_{n+1} = T_n^l T_{n-1}^k.  Dividing by d_n = sqrt(det T_n) makes them
unimodular, so x_n = Z_n / (2 d_n) follows the trace map while log d_n is a
fixed integer combination of log d_0 and log d_1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from .errors import AntiferroNormalization, NonPositiveLength, TraceCollapse
from .fibfamily import closed_form_step
from .scaled import ScaledMatrix, ScaledScalar
from .words import Word, apply, gen_fibonacci, power


@dataclass(frozen=True)
class IsingParams:
    K0: float
    K1: float
    h0: float = 0.0
    h1: float = 0.0
    k: int = 1
    l: int = 1


def elementary_transfer(K: float, h: float) -> np.ndarray:
    return np.array([[math.exp(K + h), math.exp(-K)], [math.exp(-K), math.exp(K - h)]])


def _check_lengths(p: IsingParams, n: int) -> List[int]:
    if p.k < 0 or p.l < 0:
        raise NonPositiveLength(f"negative powers (k, l) = ({p.k}, {p.l}) give no spin chain")
    N = chain_lengths(p.k, p.l, n)
    for i, v in enumerate(N):
        if v <= 0:
            raise NonPositiveLength(f"N_{i} = {v} for (k, l) = ({p.k}, {p.l})")
    return N


def chain_lengths(k: int, l: int, n: int) -> List[int]:
    """N_0 .. N_n with N_0 = N_1 = 1 and N_{j+1} = l N_j + k N_{j-1}."""
    N = [1, 1]
    while len(N) <= n:
        N.append(l * N[-1] + k * N[-2])
    return N[: n + 1]


def det_exponents(k: int, l: int, n: int) -> Tuple[int, int]:
    """(e0, e1) with d_n = d_0^e0 d_1^e1; equals (k f_{n-1}, f_n) for n >= 1."""
    e = [(1, 0), (0, 1)]
    while len(e) <= n:
        (a0, a1), (b0, b1) = e[-2], e[-1]
        e.append((l * b0 + k * a0, l * b1 + k * a1))
    return e[n]


def chain_word(p: IsingParams, n: int) -> str:
    """w_n as a letter string."""
    if n == 0:
        return "a"
    rho = gen_fibonacci(p.k, p.l)
    return str(apply(power(rho, n - 1), Word((("b", 1),))))


def chain_transfer_direct(p: IsingParams, n: int) -> ScaledMatrix:
    """T_n by the matrix recursion in scaled arithmetic (oracle)."""
    _check_lengths(p, n)
    T = [
        ScaledMatrix(elementary_transfer(p.K0, p.h0)),
        ScaledMatrix(elementary_transfer(p.K1, p.h1)),
    ]
    while len(T) <= n:
        T.append((T[-1] ** p.l) @ (T[-2] ** p.k))
    return T[n]


def brute_force_partition(p: IsingParams, n: int) -> float:
    """Sum over all spin configurations of w_n; small chains only."""
    word = chain_word(p, n)
    N = len(word)
    if N > 20:
        raise ValueError(f"chain of {N} sites is too long to enumerate")
    Kh = {"a": (p.K0, p.h0), "b": (p.K1, p.h1)}
    total = 0.0
    for s in itertools.product((1, -1), repeat=N):
        energy = 0.0
        for j, c in enumerate(word):
            K, h = Kh[c]
            s0, s1 = s[j], s[(j + 1) % N]
            energy += K * s0 * s1 + h * (s0 + s1) / 2
        total += math.exp(energy)
    return total


def _log_d(K: float) -> float:
    v = 2 * math.sinh(2 * K)
    if v <= 0:
        raise AntiferroNormalization(f"2 sinh(2K) = {v!r} <= 0 for K = {K!r}")
    return 0.5 * math.log(v)


def initial_traces(p: IsingParams) -> Tuple[float, float, float]:
    d0, d1 = math.exp(_log_d(p.K0)), math.exp(_log_d(p.K1))
    x0 = math.exp(p.K0) * math.cosh(p.h0) / d0
    y0 = math.exp(p.K1) * math.cosh(p.h1) / d1
    Ks = p.K0 + p.K1
    z0 = (math.exp(Ks) * math.cosh(p.h0 + p.h1) + math.exp(-Ks)) / (d0 * d1)
    return x0, y0, z0


@dataclass(frozen=True)
class Generation:
    n: int
    N: int
    x: ScaledScalar
    log_d: float
    log_Z: float
    F: float


def iterate_free_energy(p: IsingParams, n: int) -> Iterator[Generation]:
    """Generations 0..n of the trace-map recursion."""
    if n < 0:
        raise ValueError("generation must be >= 0")
    N = _check_lengths(p, n)
    ld0, ld1 = _log_d(p.K0), _log_d(p.K1)
    one = ScaledScalar(1.0)
    x, y, z = (ScaledScalar.of(v) for v in initial_traces(p))
    for g in range(n + 1):
        if x.sign <= 0:
            raise TraceCollapse(g, float(x))
        e0, e1 = det_exponents(p.k, p.l, g)
        log_d = e0 * ld0 + e1 * ld1
        log_Z = math.log(2.0) + x.log() + log_d
        yield Generation(g, N[g], x, log_d, log_Z, -log_Z / N[g])
        if g < n:
            x, y, z = closed_form_step(p.k, p.l, x, y, z, one)


def free_energy(p: IsingParams, n: int) -> Tuple[float, float, int]:
    """(F per site, log Z_n, N_n) at generation n."""
    *_, last = iterate_free_energy(p, n)
    return last.F, last.log_Z, last.N


def letter_frequencies(k: int, l: int) -> Tuple[float, float]:
    """Limit frequencies of a and b: the normalised Perron vector of [[0, k], [1, l]]."""
    lam = (l + math.sqrt(l * l + 4 * k)) / 2
    # M (va, vb) = lam (va, vb) gives k vb = lam va
    va, vb = k, lam
    return va / (va + vb), vb / (va + vb)


def commutator_norm(p: IsingParams) -> float:
    A = elementary_transfer(p.K0, p.h0)
    B = elementary_transfer(p.K1, p.h1)
    return float(np.linalg.norm(A @ B - B @ A))


def commuting_h1(K0: float, K1: float, h0: float) -> float:
    """Field h1 that makes T_0 and T_1 commute: e^{2K0} sinh h0 = e^{2K1} sinh h1."""
    return math.asinh(math.exp(2 * (K0 - K1)) * math.sinh(h0))


def commuting_free_energy(p: IsingParams) -> float:
    """Thermodynamic limit when T_0 and T_1 commute.

    The shared Perron eigenvector makes Z ~ lam_0^{N_a} lam_1^{N_b}, so only
    the letter frequencies enter.
    """
    fa, fb = letter_frequencies(p.k, p.l)
    lam0 = float(np.max(np.linalg.eigvalsh(elementary_transfer(p.K0, p.h0))))
    lam1 = float(np.max(np.linalg.eigvalsh(elementary_transfer(p.K1, p.h1))))
    return -(fa * math.log(lam0) + fb * math.log(lam1))
