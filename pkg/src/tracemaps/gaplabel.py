"""Concrete gap labeling for substitution chains.

Occurrence matrices for one- and two-letter words, exact Perron data in
Q(lambda), the frequency module with its congruences, and the (mu, nu) labels
of metallic-mean chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import DegenerateD, InverseLettersUnsupported
from .quadfield import QuadExact, perron_root_if_rational
from .words import Substitution, gen_fibonacci

LETTERS = ("a", "b")
PAIRS = ("aa", "ab", "ba", "bb")


def _positive_image(rho: Substitution, gen: str) -> str:
    w = rho.image(gen)
    if not w.is_positive() or len(w) == 0:
        raise InverseLettersUnsupported(
            f"image of {gen} must be a nonempty positive word, got {w}"
        )
    return str(w)


def induced_two_letter(rho: Substitution) -> Dict[str, Tuple[str, ...]]:
    """Sliding-window substitution on two-letter words.

    For a pair ``c0 c1`` the image is the list of length-2 windows of
    ``rho(c0) rho(c1)`` that start inside ``rho(c0)``.
    """
    img = {g: _positive_image(rho, g) for g in LETTERS}
    out = {}
    for pair in PAIRS:
        full = img[pair[0]] + img[pair[1]]
        m = len(img[pair[0]])
        out[pair] = tuple(full[i : i + 2] for i in range(m))
    return out


def m1(rho: Substitution) -> List[List[int]]:
    """Entry (i, j): occurrences of letter i in rho(letter j)."""
    img = {g: _positive_image(rho, g) for g in LETTERS}
    return [[img[j].count(i) for j in LETTERS] for i in LETTERS]


def m2(rho: Substitution) -> List[List[int]]:
    """Entry (i, j): occurrences of pair i in the induced image of pair j."""
    ind = induced_two_letter(rho)
    return [[ind[j].count(i) for j in PAIRS] for i in PAIRS]


def charpoly(M) -> List[int]:
    """Characteristic polynomial det(t - M), coefficients high to low.

    Faddeev-LeVerrier over the rationals; the result is integral for integer M.
    """
    n = len(M)
    A = [[Fraction(v) for v in row] for row in M]
    coeffs = [Fraction(1)]
    Mk = [[Fraction(0)] * n for _ in range(n)]
    c = Fraction(1)
    for k in range(1, n + 1):
        # Mk <- A (Mk_prev + c_prev I)
        prev = [[Mk[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(Mk[i][i] for i in range(n)) / k
        coeffs.append(c)
    assert all(v.denominator == 1 for v in coeffs)
    return [int(v) for v in coeffs]


def _poly_at(coeffs, t):
    acc = 0 * t
    for c in coeffs:
        acc = acc * t + c
    return acc


def m2_eigenvalues(k: int, l: int) -> List[QuadExact]:
    """Eigenvalues of the pair matrix of (k, l), checked exactly: {0, 0, lam+, lam-}."""
    cp = charpoly(m2(gen_fibonacci(k, l)))
    if cp != [1, -l, -k, 0, 0]:
        raise AssertionError(f"unexpected characteristic polynomial {cp}")
    lam = QuadExact.lam(k, l)
    lam_minus = l - lam
    for r in (lam, lam_minus):
        if _poly_at(cp, r) != 0:
            raise AssertionError("root check failed")
    zero = QuadExact(0, 0, k, l)
    return [zero, zero, lam, lam_minus]


def determinant_D(k: int, l: int) -> int:
    return k * (k + l - 1)


def _check_D(k: int, l: int) -> int:
    D = determinant_D(k, l)
    if D == 0:
        reason = "k = 0: reducible" if k == 0 else "k + l = 1: lengths do not grow"
        raise DegenerateD(f"D = k(k+l-1) = 0 for (k, l) = ({k}, {l}); {reason}")
    return D


@dataclass(frozen=True)
class PerronData:
    lam: QuadExact
    v1: Tuple[QuadExact, QuadExact]
    v2: Tuple[QuadExact, QuadExact, QuadExact, QuadExact]


def perron_data(k: int, l: int) -> PerronData:
    """Statistically normalised Perron eigenvectors of M1 and M2 (component sum 1)."""
    D = _check_D(k, l)
    if l * l + 4 * k < 0:
        raise ValueError(f"complex eigenvalues for (k, l) = ({k}, {l})")
    lam = QuadExact.lam(k, l)
    q = lambda a, b: (a + b * lam) / D  # noqa: E731
    v1 = (q(k * (k + l), -k), q(-k, k))
    v2 = (
        q((k + l) * (k - 1), -(k - 1)),
        q(k + l, -1),
        q(k + l, -1),
        q(-(2 * k + l), k + 1),
    )
    return PerronData(lam, v1, v2)


def mat_vec(M, v):
    return tuple(sum((M[i][j] * v[j] for j in range(len(v))), 0 * v[0]) for i in range(len(M)))


@dataclass(frozen=True)
class FrequencyModule:
    """Values (mu~ + nu~ lam) / (D k^p) with mu~ + c nu~ = 0 mod D per congruence."""

    k: int
    l: int
    D: int
    congruences: Tuple[Tuple[int, int], ...]  # pairs (c, modulus): mu~ + c*nu~ = 0

    def satisfies(self, mu_t: int, nu_t: int) -> bool:
        return all((mu_t + c * nu_t) % m == 0 for c, m in self.congruences)

    def element(self, mu_t: int, nu_t: int, p: int = 0) -> QuadExact:
        """The module number for integer data satisfying the congruences."""
        if not self.satisfies(mu_t, nu_t):
            raise ValueError(f"({mu_t}, {nu_t}) violates the module congruences")
        return QuadExact(mu_t, nu_t, self.k, self.l) / (self.D * Fraction(self.k) ** p)


def frequency_module(k: int, l: int) -> FrequencyModule:
    D = _check_D(k, l)
    m = abs(D)
    congr = []
    for c in (1, k + l):
        entry = (c % m, m)
        if entry not in congr:
            congr.append(entry)
    return FrequencyModule(k, l, D, tuple(congr))


def times_k_over_lambda(mu_t: int, nu_t: int, k: int, l: int) -> Tuple[int, int]:
    """(mu~', nu~') with mu~' + nu~' lam = (mu~ + nu~ lam)(lam - l)."""
    return (k * nu_t - l * mu_t, mu_t)


def _is_int(f: Fraction) -> bool:
    return f.denominator == 1


def _p_candidates(mod: FrequencyModule, value: QuadExact, p: Optional[int]):
    if p is not None:
        return [p]
    k = mod.k
    if abs(k) == 1:
        return [0]
    # smallest p with D k^p (a, b) integral, then enough room for k-multiples
    # to absorb the k-part of D in the congruences
    den = max(value.a.denominator, value.b.denominator)
    num = max(abs(value.a.numerator), abs(value.b.numerator)) * abs(mod.D)
    scale = lambda q: [mod.D * Fraction(k) ** q * t for t in (value.a, value.b)]  # noqa: E731
    start = None
    for q in range(-num.bit_length() - 1, den.bit_length() + 2):
        if all(_is_int(t) for t in scale(q)):
            start = q
            break
    if start is None:
        return []
    return list(range(start, start + abs(mod.D).bit_length() + 2))


def module_contains(mod: FrequencyModule, value, p: Optional[int] = None) -> bool:
    """Exact membership test; ``p`` fixes the power of k, None searches it."""
    if not isinstance(value, QuadExact):
        value = QuadExact(value, 0, mod.k, mod.l)
    elif value.field != (mod.k, mod.l):
        value._coerce(QuadExact(0, 0, mod.k, mod.l))
    if value == 0:
        return True
    lam_int = perron_root_if_rational(mod.k, mod.l)
    for q in _p_candidates(mod, value, p):
        s = mod.D * Fraction(mod.k) ** q
        if lam_int is None:
            mu_t, nu_t = value.a * s, value.b * s
            if _is_int(mu_t) and _is_int(nu_t) and mod.satisfies(int(mu_t), int(nu_t)):
                return True
        else:
            N = value.a * s
            if not _is_int(N):
                continue
            N, lam = int(N), int(lam_int)
            if any(mod.satisfies(N - nu * lam, nu) for nu in range(abs(mod.D))):
                return True
    return False


def label_to_idos(mu: int, nu: int, l: int) -> QuadExact:
    """Limit IDOS of label (mu, nu) for the metallic chain k = 1."""
    lam = QuadExact.lam(1, l)
    return (lam - 1) / l * (mu + nu / lam)


def idos_to_label(value: QuadExact, l: int) -> Optional[Tuple[int, int]]:
    """Inverse of :func:`label_to_idos` on the k = 1 module, or None."""
    if value.field != (1, l):
        value._coerce(QuadExact(0, 0, 1, l))
    mu_t, nu_t = value.a * l, value.b * l
    if not (_is_int(mu_t) and _is_int(nu_t)):
        return None
    mu_t, nu_t = int(mu_t), int(nu_t)
    if (mu_t + nu_t) % l:
        return None
    nu = (mu_t + nu_t) // l
    return (nu_t + nu, nu)
