"""Tight-binding spectra of periodic approximants.

The chain ``psi_{j+1} + psi_{j-1} + V_j psi_j = E psi_j`` with two potential
values arranged along ``rho^n(a)``.  The period trace ``t(E) = tr M(E)`` is
``2 x_n`` where ``x_n`` comes from iterating the closed-form trace map of the
substitution; bands are where ``|t| <= 2``.

``t`` is a real-rooted polynomial of degree L (the period) and ``t - 2cos(theta)``
is the characteristic polynomial of the Bloch Hamiltonian, so each band holds
exactly one zero of ``t`` and ``|t|`` is unimodal between consecutive zeros.
The band finder leans on both facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import ResolutionTooCoarse
from .fibfamily import approximant_length, closed_form_step, fib_numbers
from .words import Word, apply, gen_fibonacci, power


@dataclass(frozen=True)
class TightBindingChain:
    V1: float = 0.0  # potential on letter a
    V2: float = 2.0  # potential on letter b
    k: int = 1
    l: int = 2
    n: int = 3

    @property
    def length(self) -> int:
        return approximant_length(self.l, self.n, self.k)

    def word(self) -> str:
        """The approximant ``rho^n(a)`` as a letter string."""
        w = apply(power(gen_fibonacci(self.k, self.l), self.n), Word((("a", 1),)))
        return str(w)

    def potentials(self) -> List[float]:
        return [self.V1 if c == "a" else self.V2 for c in self.word()]


def transfer_matrix(E, V):
    return np.array([[E - V, -1.0], [1.0, 0.0]])


def trace_coords(E, V1, V2):
    """Half-traces of (T_a, T_b, T_a T_b); works on arrays and Fractions."""
    x = (E - V1) / 2
    y = (E - V2) / 2
    z = (E - V1) * (E - V2) / 2 - 1
    return x, y, z


def period_trace(chain: TightBindingChain, E, one=1.0):
    """``tr M(E)`` from n steps of the trace map."""
    x, y, z = trace_coords(E, chain.V1, chain.V2)
    for _ in range(chain.n):
        x, y, z = closed_form_step(chain.k, chain.l, x, y, z, one)
    return 2 * x


def period_trace_exact(chain: TightBindingChain, E) -> Fraction:
    """Same iteration in rational arithmetic, for rational E and potentials."""
    E, V1, V2 = Fraction(E), Fraction(chain.V1), Fraction(chain.V2)
    x, y, z = trace_coords(E, V1, V2)
    for _ in range(chain.n):
        x, y, z = closed_form_step(chain.k, chain.l, x, y, z, Fraction(1))
    return 2 * x


def direct_trace(potentials: Sequence[float], E: float) -> float:
    """Trace of the explicit product of transfer matrices (oracle)."""
    M = np.eye(2)
    for V in potentials:
        M = transfer_matrix(E, V) @ M
    return float(np.trace(M))


def bloch_eigenvalues(potentials: Sequence[float], theta: float) -> np.ndarray:
    """Spectrum of the L-site Hamiltonian with Bloch phase ``theta``.

    Its characteristic polynomial is ``t(E) - 2cos(theta)``, so theta = 0 and
    pi give all band edges.
    """
    L = len(potentials)
    if L == 1:
        return np.array([potentials[0] + 2 * np.cos(theta)])
    H = np.diag(np.asarray(potentials, dtype=complex))
    for j in range(L - 1):
        H[j, j + 1] += 1
        H[j + 1, j] += 1
    ph = np.exp(1j * theta)
    H[L - 1, 0] += ph
    H[0, L - 1] += np.conj(ph)
    return np.linalg.eigvalsh(H)


@dataclass
class Band:
    lo: float
    hi: float
    count: int  # states below the top of this band, in units of 1/L


@dataclass
class Gap:
    lo: float
    hi: float
    m: int
    L: int
    label: Optional[Tuple[int, int]] = None
    closed: bool = False

    @property
    def idos(self) -> Fraction:
        return Fraction(self.m, self.L)


@dataclass
class IdosStaircase:
    L: int
    bands: List[Band]
    gaps: List[Gap]  # open gaps
    closed_gaps: List[Gap] = field(default_factory=list)

    def spectrum(self) -> List[Tuple[float, float]]:
        """Bands with closed gaps merged, i.e. the spectrum as a point set."""
        out: List[List[float]] = []
        for b in self.bands:
            if out and b.lo <= out[-1][1]:
                out[-1][1] = max(out[-1][1], b.hi)
            else:
                out.append([b.lo, b.hi])
        return [tuple(p) for p in out]


def _default_window(chain):
    lo, hi = min(chain.V1, chain.V2), max(chain.V1, chain.V2)
    return lo - 2.5, hi + 2.5


def band_structure(
    chain: TightBindingChain,
    energy_window: Optional[Tuple[float, float]] = None,
    resolution: int = 10_000,
    tol: float = 1e-10,
    gap_tol: float = 1e-9,
) -> IdosStaircase:
    """Bands and gaps of the period-L approximant.

    Zeros of t are bracketed on the grid and refined; there must be exactly L
    of them, otherwise the grid was too coarse.  Between two zeros the maximum
    of |t| decides whether the gap is open (max > 2 + gap_tol) or closed.
    """
    if chain.n < 1:
        raise ValueError("generation n must be >= 1")
    L = chain.length
    lo, hi = energy_window or _default_window(chain)
    grid = np.linspace(lo, hi, resolution)
    t = lambda E: float(period_trace(chain, E))  # noqa: E731
    tg = period_trace(chain, grid)
    if abs(tg[0]) <= 2 or abs(tg[-1]) <= 2:
        raise ValueError("energy window does not enclose the spectrum")

    zeros = []
    s = np.sign(tg)
    for i in np.nonzero(s[:-1] * s[1:] <= 0)[0]:
        a, b = grid[i], grid[i + 1]
        if tg[i] == 0:
            if zeros and zeros[-1] == a:
                continue
            zeros.append(a)
        elif tg[i + 1] != 0:
            zeros.append(brentq(t, a, b, xtol=tol))
    if len(zeros) != L:
        raise ResolutionTooCoarse(
            f"found {len(zeros)} zeros of the period trace, expected {L}; refine the grid"
        )

    def edge(a, b):
        return brentq(lambda E: abs(t(E)) - 2, a, b, xtol=tol)

    # interior gaps: one candidate between each pair of consecutive zeros
    splits = []
    for i in range(L - 1):
        za, zb = zeros[i], zeros[i + 1]
        res = minimize_scalar(
            lambda E: -abs(t(E)), bounds=(za, zb), method="bounded", options={"xatol": tol}
        )
        e_max = float(res.x)
        if abs(t(e_max)) > 2 + gap_tol:
            splits.append((edge(za, e_max), edge(e_max, zb), False))
        else:
            splits.append((e_max, e_max, True))

    bottom = edge(lo, zeros[0])
    top = edge(zeros[-1], hi)
    bands, gaps, closed = [], [], []
    band_lo = bottom
    for i, (g_lo, g_hi, is_closed) in enumerate(splits):
        bands.append(Band(band_lo, g_lo, i + 1))
        gap = Gap(g_lo, g_hi, i + 1, L, closed=is_closed)
        (closed if is_closed else gaps).append(gap)
        band_lo = g_hi
    bands.append(Band(band_lo, top, L))
    return IdosStaircase(L, bands, gaps, closed)


def decompose_label(m: int, l: int, n: int) -> Tuple[int, int]:
    """(mu, nu) with m = mu f_n + nu f_{n-1}; minimal |nu|, then minimal |mu|."""
    fn, fm = fib_numbers(l, n), fib_numbers(l, n - 1)
    if fn == 0:
        raise ValueError("f_n = 0, no decomposition")
    if fn == 1:
        return (m, 0)
    nu0 = (m * pow(fm, -1, fn)) % fn
    best = None
    for nu in (nu0, nu0 - fn):
        rem = m - nu * fm
        assert rem % fn == 0
        cand = (rem // fn, nu)
        key = (abs(cand[1]), abs(cand[0]))
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def assign_labels(stair: IdosStaircase, l: int, n: int) -> IdosStaircase:
    """Attach (mu, nu) labels to every gap (k = 1 chains)."""
    for gap in stair.gaps + stair.closed_gaps:
        gap.label = decompose_label(gap.m, l, n)
    return stair
