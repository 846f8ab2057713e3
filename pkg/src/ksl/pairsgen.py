"""A two-parameter family of torus-knot pairs with a common lens space surgery.

Polynomials ``a_k, b_k, c_k, d_k, p_k, q_k`` in ``Z[n]`` are built by an
exact-division recursion starting from ``(-1, 1, 1, 1, 0, n+1)`` at
``k = -1``.  For ``k >= 1`` and integers ``n >= 2``,
``p_k``-surgery on ``T(a_k, b_k)`` and on ``T(c_k, d_k)`` give the same
lens space, while the two knots have different genera.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .exactalg import IntPoly
from .staircase import torus_staircase_exponents
from .surgery import (
    Lens,
    LensSpace,
    Slope,
    casson_correction,
    classify_torus_surgery,
    lens_homeo_oriented,
)
from .torusknot import TorusKnot, delta_dd_half, genus, signature

N = IntPoly.var()


class DegenerateInstance(ValueError):
    pass


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class PairFamilyState:
    k: int
    a: IntPoly
    b: IntPoly
    c: IntPoly
    d: IntPoly
    p: IntPoly
    q: IntPoly

    def polys(self) -> tuple[IntPoly, ...]:
        return (self.a, self.b, self.c, self.d, self.p, self.q)

    def at(self, n: int) -> tuple[int, ...]:
        return tuple(f(n) for f in self.polys())


def initial_state() -> PairFamilyState:
    one = IntPoly.const(1)
    return PairFamilyState(-1, IntPoly.const(-1), one, one, one, IntPoly(()), N + 1)


def invariant_failures(s: PairFamilyState) -> list[str]:
    """Names of the structural identities that fail at this level (empty if none)."""
    bad = []
    if s.k < 0:
        return bad
    if s.a * s.b + 1 != s.p:
        bad.append("ab+1=p")
    if s.c * s.d - 1 != s.p:
        bad.append("cd-1=p")
    if s.b * s.b * s.d * s.d != s.p * s.q + 1:
        bad.append("b^2d^2=pq+1")
    k = s.k
    for name, f, deg in zip("abcdpq", s.polys(), (k, k + 1, k, k + 1, 2 * k + 1, 2 * k + 3)):
        if f.degree != deg or not f.is_monic():
            bad.append(f"{name} monic of degree {deg}")
    return bad


def step(s: PairFamilyState) -> PairFamilyState:
    """Advance one level.  Raises ``NonExactDivision`` if a quotient leaves
    ``Z[n]``, and ``InvariantViolation`` if an identity fails."""
    a = s.d
    b = (s.q - 1).exact_div(s.d)
    c = s.b
    d = (s.q + 1).exact_div(s.b)
    p = s.q
    q = (b * b * d * d - 1).exact_div(s.q)
    nxt = PairFamilyState(s.k + 1, a, b, c, d, p, q)
    bad = invariant_failures(nxt)
    if bad:
        raise InvariantViolation(f"level {nxt.k}: {', '.join(bad)}")
    return nxt


def generate(k_max: int) -> list[PairFamilyState]:
    """States for ``k = -1, ..., k_max``."""
    if k_max < -1:
        raise ValueError("k_max must be >= -1")
    states = [initial_state()]
    while states[-1].k < k_max:
        states.append(step(states[-1]))
    return states


def state(k: int) -> PairFamilyState:
    return generate(k)[-1]


@dataclass(frozen=True)
class PairInstance:
    k: int
    n: int
    K1: TorusKnot
    K2: TorusKnot
    slope: int
    lens1: LensSpace
    lens2: LensSpace
    raw: tuple[int, int, int, int]  # (a, b, c, d) as evaluated, before canonical ordering


def instantiate(s: PairFamilyState, n: int) -> PairInstance:
    if s.k < 1:
        raise DegenerateInstance(f"level k={s.k} is below 1")
    a, b, c, d, p, _ = s.at(n)
    problems = []
    if min(abs(a), abs(b)) < 2 or min(abs(c), abs(d)) < 2:
        problems.append("a parameter is +-1 (unknot)")
    if gcd(a, b) != 1 or gcd(c, d) != 1:
        problems.append("parameters are not coprime")
    if a == c or b == d:
        problems.append("the two knots coincide in a parameter")
    if problems:
        raise DegenerateInstance(f"k={s.k}, n={n}: " + "; ".join(problems))
    K1, K2 = TorusKnot(a, b), TorusKnot(c, d)
    r = Slope(p)
    lenses = []
    for K in (K1, K2):
        cls = classify_torus_surgery(K, r, require_params=True)
        if not isinstance(cls, Lens) or cls.lens is None:
            raise DegenerateInstance(f"k={s.k}, n={n}: {K} surgery at {p} is {cls}, not a lens space")
        lenses.append(cls.lens)
    return PairInstance(s.k, n, K1, K2, p, lenses[0], lenses[1], (a, b, c, d))


@dataclass
class Check:
    id: str
    description: str
    anchor: str
    passed: bool
    witness: dict = field(default_factory=dict)


STAIRCASE_PREFIX = 64


def verify_pair(inst: PairInstance) -> list[Check]:
    """Run the five pair checks; failures are recorded, never raised."""
    K1, K2 = inst.K1, inst.K2
    a, b, c, d = inst.raw
    p = inst.slope
    g1, g2 = genus(K1), genus(K2)
    dd1, dd2 = delta_dd_half(K1), delta_dd_half(K2)
    s1, s2 = signature(K1), signature(K2)
    r = Slope(p)
    st1 = [g1, *itertools.islice(torus_staircase_exponents(K1), STAIRCASE_PREFIX)]
    st2 = [g2, *itertools.islice(torus_staircase_exponents(K2), STAIRCASE_PREFIX)]
    return [
        Check(
            "lens-homeomorphic",
            "both surgeries are orientation-homeomorphic lens spaces",
            "lens surgeries L(p, b^2) and L(p, d^2) with b^2 d^2 = 1 mod p",
            lens_homeo_oriented(inst.lens1, inst.lens2) and (b * b * d * d - 1) % p == 0,
            {"lens1": str(inst.lens1), "lens2": str(inst.lens2)},
        ),
        Check(
            "genera-differ",
            "the two torus knots have different Seifert genus",
            "torus knots with a common nonzero surgery have different genera",
            g1 != g2,
            {"genus1": g1, "genus2": g2},
        ),
        Check(
            "casson-equal",
            "equal Casson-Walker knot corrections, hence equal Delta''(1)/2",
            "Casson-Walker surgery formula at a shared slope",
            dd1 == dd2 and casson_correction(dd1, r) == casson_correction(dd2, r),
            {"ddHalf1": dd1, "ddHalf2": dd2},
        ),
        Check(
            "signatures-negative",
            "both knots are positive torus knots (negative signature)",
            "positive torus knots have negative signature",
            s1 < 0 and s2 < 0,
            {"signature1": s1, "signature2": s2},
        ),
        Check(
            "staircases-differ",
            "the L-space staircases of the two knots differ",
            "staircase form of L-space knot Alexander polynomials",
            st1 != st2,
            {"prefix1": st1[:4], "prefix2": st2[:4]},
        ),
    ]


def pair_verified(inst: PairInstance) -> bool:
    return all(ch.passed for ch in verify_pair(inst))


def fibonacci(m: int) -> int:
    """Fibonacci numbers for any integer index, ``F(-m) = (-1)^(m+1) F(m)``."""
    if m < 0:
        return fibonacci(-m) * (1 if m % 2 else -1)
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def fibonacci_closed_form(k: int) -> tuple[int, ...]:
    F = fibonacci
    return (
        F(2 * k) + F(2 * k + 2),
        F(2 * k + 3),
        F(2 * k + 1),
        F(2 * k + 2) + F(2 * k + 4),
        F(4 * k + 4),
        F(4 * k + 8),
    )


def fibonacci_specialization(k: int, states: list[PairFamilyState] | None = None) -> bool:
    """Values at ``n = 2`` agree with the Fibonacci closed forms."""
    s = state(k) if states is None else states[k + 1]
    return s.at(2) == fibonacci_closed_form(k)


def n1_closed_form(k: int) -> tuple[int, ...]:
    return (2 * k + 1, 1, 1, 2 * k + 3, 2 * k + 2, 2 * k + 4)


def n1_specialization(k: int, states: list[PairFamilyState] | None = None) -> bool:
    """Values at ``n = 1`` agree with ``(2k+1, 1, 1, 2k+3, 2k+2, 2k+4)``."""
    s = state(k) if states is None else states[k + 1]
    return s.at(1) == n1_closed_form(k)
