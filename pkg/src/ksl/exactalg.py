"""Exact integer algebra: Laurent polynomials in ``t`` and dense polynomials in ``n``.

Everything here works over Python's arbitrary-precision ``int``; rationals
are :class:`fractions.Fraction`.  Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Rational = Fraction


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division over the integers leaves a remainder."""


def _superscript(var: str, e: int) -> str:
    if e == 1:
        return var
    return f"{var}^{e}"


def _render(terms: Iterable[tuple[int, int]], var: str) -> str:
    # terms in display order, as (exponent, coefficient)
    out = []
    for e, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = _superscript(var, e)
        else:
            body = f"{mag}{_superscript(var, e)}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) if out else "0"


class LaurentPoly:
    """Sparse integer Laurent polynomial in ``t``.

    Stored as an exponent -> coefficient mapping with no zero coefficients.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = int(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_intpoly(cls, f: "IntPoly", shift: int = 0) -> "LaurentPoly":
        """Read ``f`` as a polynomial in ``t`` and multiply by ``t**shift``."""
        return cls({i + shift: c for i, c in enumerate(f.coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs by decreasing exponent."""
        return sorted(self._c.items(), reverse=True)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    @property
    def breadth(self) -> int:
        return self.max_exp - self.min_exp

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def inverted(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def substitute_power(self, w: int) -> "LaurentPoly":
        """Substitute ``t -> t**w``."""
        if w == 0:
            return LaurentPoly({0: sum(self._c.values())})
        return LaurentPoly({e * w: v for e, v in self._c.items()})

    def __call__(self, x):
        if isinstance(x, int) and x != 0 and self._c and self.min_exp < 0:
            x = Fraction(x)
        return sum((v * x**e for e, v in self._c.items()), 0)

    def at_one(self) -> int:
        return sum(self._c.values())

    def derivative_at_one(self) -> int:
        return sum(v * e for e, v in self._c.items())

    def second_derivative_at_one(self) -> int:
        return sum(v * e * (e - 1) for e, v in self._c.items())

    def is_symmetric(self) -> bool:
        return all(self._c.get(-e) == v for e, v in self._c.items())

    def to_intpoly(self) -> tuple["IntPoly", int]:
        """Return ``(f, s)`` with ``self == t**s * f`` and ``f`` an ordinary polynomial."""
        if not self._c:
            return IntPoly(()), 0
        s = self.min_exp
        dense = [0] * (self.max_exp - s + 1)
        for e, v in self._c.items():
            dense[e - s] = v
        return IntPoly(dense), s

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _render(self.terms(), "t")


class IntPoly:
    """Dense integer polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def var(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-v for v in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod_int(self, g: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division over the integers.

        Stops (leaving a nonzero remainder) as soon as a leading coefficient
        is not divisible by the leading coefficient of ``g``.
        """
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dg = len(g.coeffs) - 1
        lead = g.coeffs[-1]
        quot = [0] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            top = rem[-1]
            if top % lead:
                break
            c = top // lead
            shift = len(rem) - 1 - dg
            quot[shift] = c
            for i, v in enumerate(g.coeffs):
                rem[shift + i] -= c * v
            while rem and rem[-1] == 0:
                rem.pop()
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, g: "IntPoly") -> "IntPoly":
        q, r = self.divmod_int(g)
        if not r.is_zero():
            raise NonExactDivision(f"({self}) is not divisible by ({g}) in Z[n]; remainder {r}")
        return q

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.exact_div(other)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def render(self, var: str = "n") -> str:
        terms = [(i, c) for i, c in enumerate(self.coeffs) if c]
        return _render(reversed(terms), var)

    def __str__(self):
        return self.render()


def lp_second_derivative_at_one(f: LaurentPoly) -> int:
    return f.second_derivative_at_one()


def lp_is_symmetric(f: LaurentPoly) -> bool:
    return f.is_symmetric()


def ip_exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    return f.exact_div(g)


def ip_eval(f: IntPoly, n: int) -> int:
    return f(n)


@lru_cache(maxsize=None)
def cyclotomic(N: int) -> IntPoly:
    """The N-th cyclotomic polynomial, by exact division of ``x**N - 1``."""
    if N < 1:
        raise ValueError("N must be positive")
    f = IntPoly([-1] + [0] * (N - 1) + [1])
    for d in range(1, N):
        if N % d == 0:
            f = f.exact_div(cyclotomic(d))
    return f
