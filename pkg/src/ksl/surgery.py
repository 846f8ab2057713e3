"""Dehn surgeries on torus knots, lens spaces and surgery-formula bookkeeping."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple, Union

from .exactalg import LaurentPoly
from .torusknot import TorusKnot, alexander, recognize_from_alexander, signature


class UnsupportedSlope(ValueError):
    pass


class DivisionByZeroSlope(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class Slope:
    """A reduced surgery slope ``p/q`` with ``q >= 1``."""

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if q == 0:
            raise ValueError("slope denominator must be nonzero")
        if q < 0:
            p, q = -p, -q
        d = gcd(p, q)
        object.__setattr__(self, "p", p // d)
        object.__setattr__(self, "q", q // d)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        num, _, den = text.strip().partition("/")
        return cls(int(num), int(den) if den else 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


@dataclass(frozen=True)
class LensSpace:
    """``L(order, param)``; ``order == 1`` is the 3-sphere."""

    order: int
    param: int

    def __post_init__(self):
        p = int(self.order)
        if p < 1:
            raise ValueError("lens space order must be positive")
        q = int(self.param) % p
        if gcd(q, p) != 1:
            raise ValueError(f"L({p},{q}) needs gcd(q, p) = 1")
        object.__setattr__(self, "order", p)
        object.__setattr__(self, "param", q)

    def __str__(self):
        return f"L({self.order},{self.param})"


def lens_homeo_oriented(L1: LensSpace, L2: LensSpace) -> bool:
    """Orientation-preserving homeomorphism test: ``q1 = q2^{+-1} mod p``."""
    if L1.order != L2.order:
        return False
    p = L1.order
    return (L1.param - L2.param) % p == 0 or (L1.param * L2.param - 1) % p == 0


@dataclass(frozen=True)
class Lens:
    lens: LensSpace | None = None  # parameters only asserted for integer slopes

    def __str__(self):
        return str(self.lens) if self.lens else "Lens"


@dataclass(frozen=True)
class ConnectedSumOfLens:
    order_a: int
    order_b: int

    def __str__(self):
        return f"L({self.order_a},·)#L({self.order_b},·)"


@dataclass(frozen=True)
class SmallSeifert:
    def __str__(self):
        return "SmallSeifert"


@dataclass(frozen=True)
class ZeroFilling:
    def __str__(self):
        return "ZeroFilling"


SurgeryClass = Union[Lens, ConnectedSumOfLens, SmallSeifert, ZeroFilling]


def classify_torus_surgery(T: TorusKnot, r: Slope, require_params: bool = False) -> SurgeryClass:
    """Moser's trichotomy for ``r``-surgery on a nontrivial torus knot.

    Integer lens surgeries ``p = ab +- 1`` come with parameters
    ``L(|p|, B^2 mod |p|)``; for negative knots the orientation flips the
    parameter to ``-B^2``.  Lens surgeries at non-integral slopes carry no
    parameters.
    """
    if T.is_trivial():
        raise ValueError(f"{T} is the unknot")
    if r.p == 0:
        if require_params:
            raise UnsupportedSlope("slope 0 has no lens parameters")
        return ZeroFilling()
    ab = T.a * T.b
    if r.q == 1 and r.p == ab:
        return ConnectedSumOfLens(T.A, T.B)
    if abs(r.p - r.q * ab) == 1:
        if r.q != 1:
            return Lens(None)
        order = abs(r.p)
        param = T.B**2 if r.p > 0 else -T.B**2
        return Lens(LensSpace(order, param))
    return SmallSeifert()


def casson_correction(dd_half: int, r: Slope) -> Fraction:
    """The knot term ``(1/r) * Delta''(1)/2`` of the Casson-Walker surgery formula."""
    if r.p == 0:
        raise DivisionByZeroSlope("slope 0 has no Casson-Walker correction")
    return Fraction(r.q * dd_half, r.p)


class Verdict(enum.Enum):
    SAME = "same"
    ALEXANDER_DISTINCT = "alexander-distinct"
    SIGNATURE_DISTINCT = "signature-distinct"


@lru_cache(maxsize=4096)
def _recognize(f: LaurentPoly):
    return recognize_from_alexander(f)


def zero_surgery_torus_compare(T1: TorusKnot, T2: TorusKnot) -> Verdict:
    """Decide whether two torus knots could share a 0-surgery.

    The Alexander polynomial pins down ``{A, B}``; the sign of the
    signature then fixes the chirality.
    """
    if T1.is_trivial() or T2.is_trivial():
        raise ValueError("both knots must be nontrivial")
    if _recognize(alexander(T1)) != _recognize(alexander(T2)):
        return Verdict.ALEXANDER_DISTINCT
    if signature(T1) != signature(T2):
        return Verdict.SIGNATURE_DISTINCT
    return Verdict.SAME


def satellite_delta_dd(dd_pattern: int, dd_companion: int, w: int) -> int:
    """``Delta''_K(1)`` of a satellite from pattern ``P(U)``, companion and winding number."""
    if w < 0:
        raise ValueError("winding number must be nonnegative")
    return dd_pattern + w * w * dd_companion


class PatternHomology(NamedTuple):
    free_rank: int
    torsion_order: int
    embeddable: bool


def pattern_zero_surgery_homology(w: int) -> PatternHomology:
    """H_1 of 0-surgery on a pattern of winding number ``w`` in the solid torus: Z + Z/w."""
    if w < 0:
        raise ValueError("winding number must be nonnegative")
    if w == 0:
        return PatternHomology(2, 0, False)
    return PatternHomology(1, w, w == 1)


def cable_signature(sigma_torus: int, sigma_companion: int, q: int) -> int:
    if q < 2:
        raise ValueError("cable winding number must be at least 2")
    return sigma_torus if q % 2 == 0 else sigma_torus + sigma_companion


def _survives_casson(g: int, h: int, k: int, w: int) -> bool:
    # Delta''_K(1) = g(g+1) must not exceed the pattern/companion bound
    return g * (g + 1) <= h * (h + 1) + w * w * k * (k + 1)


def _survives_support(h: int, k: int, w: int) -> bool:
    # w > 2h+1 leaves t^(wk-h-1) without a coefficient
    return not (w * k - w + h < w * k - h - 1)


def _survives_baker_motegi(h: int, k: int, w: int) -> bool:
    return Fraction(w * (2 * k - 1)) < Fraction(2 * h - 1 + w, w - 1)


def satellite_lspace_exclusion(g: int) -> list[tuple[int, int, int]]:
    """Satellite decompositions ``g = h + w*k`` of a genus-``g`` L-space knot with the
    Alexander polynomial of ``T(2, 2g+1)`` that survive all three obstructions.

    Searches ``h >= 0``, ``k >= 1``, ``w >= 2``; the result should always be empty.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    out = []
    for w in range(2, g + 1):
        for k in range(1, g // w + 1):
            h = g - w * k
            if (
                _survives_casson(g, h, k, w)
                and _survives_support(h, k, w)
                and _survives_baker_motegi(h, k, w)
            ):
                out.append((h, k, w))
    return out
