"""Torus knots and their classical invariants."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .exactalg import IntPoly, LaurentPoly, cyclotomic

# Above this Seifert-form size the signature falls back to the
# Gordon-Litherland-Murasugi recursion.
SEIFERT_SIZE_LIMIT = 240


@dataclass(frozen=True)
class TorusKnot:
    """The torus knot ``T(a, b)`` in canonical form.

    Canonical form has ``b >= 1``, ``|a| <= b`` and carries the chirality in
    the sign of ``a``; ``T(3, 2)``, ``T(-2, -3)`` and ``T(2, 3)`` all
    normalize to ``T(2, 3)``.
    """

    a: int
    b: int

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if a == 0 or b == 0:
            raise ValueError(f"torus knot parameters must be nonzero, got ({a}, {b})")
        if gcd(a, b) != 1:
            raise ValueError(f"torus knot parameters must be coprime, got ({a}, {b})")
        sign = 1 if (a > 0) == (b > 0) else -1
        lo, hi = sorted((abs(a), abs(b)))
        object.__setattr__(self, "a", sign * lo)
        object.__setattr__(self, "b", hi)

    @property
    def A(self) -> int:
        return abs(self.a)

    @property
    def B(self) -> int:
        return self.b

    def is_trivial(self) -> bool:
        return self.A == 1

    def is_positive(self) -> bool:
        return self.a > 0 and not self.is_trivial()

    def __str__(self):
        return f"T({self.a},{self.b})"


def mirror(T: TorusKnot) -> TorusKnot:
    return TorusKnot(-T.a, T.b)


def genus(T: TorusKnot) -> int:
    return (T.A - 1) * (T.B - 1) // 2


@lru_cache(maxsize=1024)
def _alexander(A: int, B: int) -> LaurentPoly:
    def binom(k):  # t**k - 1
        return IntPoly([-1] + [0] * (k - 1) + [1])

    num = binom(A * B) * binom(1)
    f = num.exact_div(binom(A)).exact_div(binom(B))
    g = (A - 1) * (B - 1) // 2
    return LaurentPoly.from_intpoly(f, -g)


def alexander(T: TorusKnot) -> LaurentPoly:
    """Symmetrized Alexander polynomial, computed by exact division of
    ``(t^AB - 1)(t - 1)`` by ``(t^A - 1)(t^B - 1)``."""
    return _alexander(T.A, T.B)


def delta_dd_half(T: TorusKnot) -> int:
    """Half the second derivative of the Alexander polynomial at 1, in closed form."""
    return (T.a**2 - 1) * (T.b**2 - 1) // 24


# -- signature ---------------------------------------------------------------


def seifert_matrix(T: TorusKnot) -> list[list[int]]:
    """Seifert matrix of the closure of ``(s_1 ... s_{A-1})^B``.

    Basis: one loop per pair of consecutive crossings in each braid column,
    ordered column by column.  For a negative knot the mirror form ``-V^T``
    is returned.
    """
    A, B = T.A, T.B
    idx = {}
    for i in range(1, A):
        for j in range(B - 1):
            idx[(i, j)] = len(idx)
    n = len(idx)
    V = [[0] * n for _ in range(n)]
    for (i, j), x in idx.items():
        V[x][x] = -1
        y = idx.get((i, j + 1))
        if y is not None:
            V[x][y] = 1
        # loops in the next column whose crossings interleave with this one
        y = idx.get((i + 1, j))
        if y is not None:
            V[x][y] = 1
        y = idx.get((i + 1, j - 1))
        if y is not None:
            V[y][x] = -1
    if T.a < 0:
        V = [[-V[j][i] for j in range(n)] for i in range(n)]
    return V


def symmetric_signature(M: list[list[int]]) -> int:
    """Signature of a symmetric integer matrix by congruence diagonalization over Q."""
    n = len(M)
    S = [[Fraction(x) for x in row] for row in M]
    pos = neg = 0
    k = 0
    active = list(range(n))
    while active:
        k = active[0]
        if S[k][k] == 0:
            # look for another nonzero diagonal entry to swap in
            piv = next((j for j in active if S[j][j] != 0), None)
            if piv is not None:
                k = piv
            else:
                j = next((j for j in active if S[active[0]][j] != 0), None)
                if j is None:
                    active.pop(0)
                    continue
                k = active[0]
                # row/col k += row/col j makes the diagonal 2*S[k][j]
                for m in range(n):
                    S[k][m] += S[j][m]
                for m in range(n):
                    S[m][k] += S[m][j]
        p = S[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        row_k = S[k]
        for i in active:
            f = S[i][k]
            if f:
                f = f / p
                row_i = S[i]
                for j in active:
                    if row_k[j]:
                        row_i[j] -= f * row_k[j]
                row_i[k] = 0
    return pos - neg


def seifert_signature(T: TorusKnot) -> int:
    V = seifert_matrix(T)
    n = len(V)
    return symmetric_signature([[V[i][j] + V[j][i] for j in range(n)] for i in range(n)])


def recursive_signature(T: TorusKnot) -> int:
    """Signature via the Gordon-Litherland-Murasugi reduction, in O(log) steps."""
    p, q = T.B, T.A
    acc, sign = 0, 1
    while True:
        if p < q:
            p, q = q, p
        if q == 1:
            break
        if q == 2:
            acc += sign * -(p - 1)
            break
        if p > 2 * q:
            steps = (p - 1) // (2 * q)
            acc -= sign * steps * (q * q - 1 if q % 2 else q * q)
            p -= 2 * q * steps
            continue
        # q < p < 2q
        acc -= sign * (q * q - 1 if q % 2 else q * q - 2)
        sign = -sign
        p = 2 * q - p
    return acc if T.a > 0 else -acc


@lru_cache(maxsize=4096)
def signature(T: TorusKnot, method: str = "auto") -> int:
    """Knot signature; negative for positive torus knots.

    ``method`` is ``"seifert"``, ``"recursive"`` or ``"auto"`` (Seifert form
    when it has at most ``SEIFERT_SIZE_LIMIT`` rows).
    """
    if method == "auto":
        method = "seifert" if 2 * genus(T) <= SEIFERT_SIZE_LIMIT else "recursive"
    if method == "seifert":
        return seifert_signature(T)
    if method == "recursive":
        return recursive_signature(T)
    raise ValueError(f"unknown signature method {method!r}")


# -- recognition -------------------------------------------------------------


class Recognition(enum.Enum):
    UNKNOT = "unknot"
    NOT_TORUS = "not-torus"


def _is_probable_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _prime_factors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


@lru_cache(maxsize=None)
def _root_of_unity_mod(N: int) -> tuple[int, int]:
    """A prime ``P = 1 mod N`` and an element of exact order ``N`` mod ``P``."""
    P = N + 1
    while not _is_probable_prime(P):
        P += N
    primes = _prime_factors(N)
    for x in range(2, P):
        z = pow(x, (P - 1) // N, P)
        if all(pow(z, N // r, P) != 1 for r in primes):
            return P, z
    raise AssertionError("unreachable")


def _divisible_by_cyclotomic(F: IntPoly, N: int) -> bool:
    if N == 1:
        return F(1) == 0
    P, z = _root_of_unity_mod(N)
    # Phi_N | F forces F(z) = 0 mod P; confirm survivors exactly
    acc = 0
    for c in reversed(F.coeffs):
        acc = (acc * z + c) % P
    if acc:
        return False
    return F.divmod_int(cyclotomic(N))[1].is_zero()


def _euler_phi(m: int) -> int:
    out = m
    for p in _prime_factors(m):
        out -= out // p
    return out


def recognize_from_alexander(f: LaurentPoly):
    """Recover ``(A, B)`` with ``A < B`` from a torus-knot Alexander polynomial.

    Returns ``Recognition.UNKNOT`` for ``f == 1`` and
    ``Recognition.NOT_TORUS`` if no torus knot has this polynomial, which
    includes anything that is not symmetric with ``f(1) = 1``.
    """
    if f == 1:
        return Recognition.UNKNOT
    if not f.is_symmetric() or f.at_one() != 1:
        return Recognition.NOT_TORUS
    g = f.max_exp
    F, _ = f.to_intpoly()
    # A + B <= 2g + 3 forces AB <= 4g + 2
    AB = next(
        (N for N in range(4 * g + 2, 1, -1) if _euler_phi(N) <= 2 * g and _divisible_by_cyclotomic(F, N)),
        None,
    )
    if AB is None:
        return Recognition.NOT_TORUS
    s = AB + 1 - 2 * g
    disc = s * s - 4 * AB
    if disc < 0 or isqrt(disc) ** 2 != disc:
        return Recognition.NOT_TORUS
    r = isqrt(disc)
    A, B = (s - r) // 2, (s + r) // 2
    if A < 2 or gcd(A, B) != 1 or _alexander(A, B) != f:
        return Recognition.NOT_TORUS
    return (A, B)
