"""Staircase (Krcatovich) form of L-space knot Alexander polynomials.

An L-space knot of genus ``g`` has

    Delta(t) = (1 - t^-1) * sum(t^a for a in exps) + t^-g

for a strictly decreasing exponent list ``exps`` of length ``g``.  The
functions here only use the necessary conditions on ``exps``; whether a
given staircase is realized by an actual knot is not decided.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .exactalg import LaurentPoly
from .torusknot import TorusKnot, genus as torus_genus


@dataclass(frozen=True)
class Staircase:
    g: int
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(a) for a in self.exps))

    @classmethod
    def of(cls, exps) -> "Staircase":
        exps = tuple(exps)
        return cls(exps[0] if exps else 0, exps)

    def __str__(self):
        return "[" + ",".join(map(str, self.exps)) + "]"


def validate(s: Staircase) -> bool:
    g, a = s.g, s.exps
    if g < 1 or len(a) != g or a[0] != g or a[-1] != 2 - g:
        return False
    if any(x <= y for x, y in zip(a, a[1:])):
        return False
    if any(x > g - 2 * i for i, x in enumerate(a)):
        return False
    middle = set(a[1:-1])
    return all((x in middle) != ((1 - x) in middle) for x in range(1, g - 1))


def enumerate_staircases(g: int) -> list[Staircase]:
    """All valid staircases of genus ``g``, in decreasing lexicographic order.

    Candidates pick one element from each pair ``{x, 1-x}`` for
    ``x = g-2, ..., 1`` and are then filtered by :func:`validate`.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    if g == 1:
        return [Staircase(1, (1,))]
    pairs = [(x, 1 - x) for x in range(g - 2, 0, -1)]
    out = []
    for choice in itertools.product(*pairs):
        s = Staircase(g, (g, *sorted(choice, reverse=True), 2 - g))
        if validate(s):
            out.append(s)
    out.sort(key=lambda s: s.exps, reverse=True)
    return out


def to_alexander(s: Staircase) -> LaurentPoly:
    body = LaurentPoly({a: 1 for a in s.exps})
    return LaurentPoly({0: 1, -1: -1}) * body + LaurentPoly.monomial(-s.g)


def from_alexander(f: LaurentPoly) -> Staircase:
    """Read the exponent list back off an Alexander polynomial.

    Requires nonzero coefficients alternating +1, -1, ..., +1 from the top.
    """
    terms = f.terms()
    if not terms or len(terms) % 2 == 0:
        raise ValueError("not an alternating +-1 polynomial with an odd number of terms")
    for i, (_, c) in enumerate(terms):
        if c != (1 if i % 2 == 0 else -1):
            raise ValueError("coefficients do not alternate +1, -1")
    exps: list[int] = []
    for k in range(0, len(terms) - 1, 2):
        top, bot = terms[k][0], terms[k + 1][0]
        exps.extend(range(top, bot, -1))
    return Staircase(terms[0][0], tuple(exps))


def torus_staircase_exponents(T: TorusKnot) -> Iterator[int]:
    """Lazily yield the staircase exponents of a torus knot.

    They are ``g - s`` for the first ``g`` elements ``s`` of the semigroup
    generated by ``A`` and ``B``, so this works for knots far too large for
    :func:`to_alexander`.
    """
    A, B, g = T.A, T.B, torus_genus(T)
    if A == 1:
        return
    # each semigroup element below A*B is uniquely i*A + j*B with 0 <= j < A;
    # row j is opened only once j*B - B has been emitted
    heap = [(0, 0)]
    for _ in range(g):
        s, j = heapq.heappop(heap)
        yield g - s
        heapq.heappush(heap, (s + A, j))
        if s == j * B and j + 1 < A:
            heapq.heappush(heap, ((j + 1) * B, j + 1))


def torus_staircase(T: TorusKnot) -> Staircase:
    return Staircase(torus_genus(T), tuple(torus_staircase_exponents(T)))


def t2_staircase(g: int) -> Staircase:
    """The staircase ``[g, g-2, ..., 2-g]`` of ``T(2, 2g+1)``."""
    return Staircase(g, tuple(range(g, 1 - g, -2)))


def delta_dd_half(s: Staircase) -> int:
    return sum(s.exps) + s.g * (s.g - 1) // 2


def extremal_bound_check(g: int) -> tuple[int, Staircase]:
    """Maximum of ``delta_dd_half`` over genus-``g`` staircases and the first maximizer."""
    best = max(enumerate_staircases(g), key=delta_dd_half)
    return delta_dd_half(best), best


def maximizers(g: int) -> list[Staircase]:
    cands = enumerate_staircases(g)
    top = max(map(delta_dd_half, cands))
    return [s for s in cands if delta_dd_half(s) == top]


def dd_collision_search(g_max: int) -> list[tuple[int, Staircase, Staircase]]:
    """Distinct same-genus staircases sharing a ``delta_dd_half`` value, for ``g <= g_max``."""
    if g_max < 1:
        raise ValueError("g_max must be at least 1")
    out = []
    for g in range(1, g_max + 1):
        by_value: dict[int, list[Staircase]] = {}
        for s in enumerate_staircases(g):
            by_value.setdefault(delta_dd_half(s), []).append(s)
        for group in by_value.values():
            out.extend((g, s1, s2) for s1, s2 in itertools.combinations(group, 2))
    return out


def first_collision_genus(g_max: int) -> int | None:
    hits = dd_collision_search(g_max)
    return min((g for g, _, _ in hits), default=None)


def _gradings(s: Staircase) -> list[tuple[int, int]]:
    ns = [e for e, _ in to_alexander(s).terms()]
    out = [(ns[0], 0)]
    for k in range(1, len(ns)):
        m = out[-1][1]
        m = m - 2 * (ns[k - 1] - ns[k]) + 1 if k % 2 else m - 1
        out.append((ns[k], m))
    return out


def hfk_bigraded(s: Staircase) -> list[tuple[int, int]]:
    """(Alexander, Maslov) gradings of the knot Floer generators, top first.

    Generators sit at the nonzero terms ``n_0 > n_1 > ...`` of the Alexander
    polynomial, with ``M_0 = 0``, ``M_{2j-1} = M_{2j-2} - 2(n_{2j-2} - n_{2j-1}) + 1``
    and ``M_{2j} = M_{2j-1} - 1``.  The result is rechecked against its
    Euler characteristic, symmetry and top grading before being returned.
    """
    gens = _gradings(s)
    bad = _hfk_failures(s, gens)
    if bad:
        raise AssertionError(f"grading recursion broke {', '.join(bad)} for {s}")
    return gens


def _hfk_failures(s: Staircase, gens: list[tuple[int, int]]) -> list[str]:
    bad = []
    euler: dict[int, int] = {}
    for a, m in gens:
        euler[a] = euler.get(a, 0) + (1 if m % 2 == 0 else -1)
    delta = to_alexander(s)
    if LaurentPoly(euler) != delta or len(gens) != len(delta.coeffs):
        bad.append("euler characteristic")
    pts = set(gens)
    if len(pts) != len(gens) or any((-a, m - 2 * a) not in pts for a, m in gens):
        bad.append("symmetry")
    if max(gens) != (s.g, 0):
        bad.append("top grading")
    return bad


def hfk_postcondition_failures(s: Staircase) -> list[str]:
    """Which of Euler characteristic, (A, M) <-> (-A, M - 2A) symmetry and top grading fail."""
    return _hfk_failures(s, _gradings(s))


def _check_slope(p: int, q: int):
    if p == 0 or q < 1 or gcd(p, q) != 1:
        raise ValueError(f"need p != 0, q >= 1, gcd(p, q) = 1; got {p}/{q}")


def surgery_hf_dim(s: Staircase, p: int, q: int = 1) -> int:
    """Total dimension of HF-hat of p/q-surgery on an L-space knot with staircase ``s``."""
    _check_slope(p, q)
    nu = 2 * s.g - 1
    return q * nu + abs(p - q * nu)


def is_lspace_slope(s: Staircase, p: int, q: int = 1) -> bool:
    _check_slope(p, q)
    return p >= q * (2 * s.g - 1)


def hf_odd_dim_large(s: Staircase, m: int) -> int:
    if m < 1 or m < 2 * s.g - 1:
        raise ValueError(f"m must be >= max(1, 2g-1) = {max(1, 2 * s.g - 1)}")
    diff = surgery_hf_dim(s, m, 1) - m
    return diff // 2
